#ifndef FADCAP_CAPACITY_HPP
#define FADCAP_CAPACITY_HPP

#include "fadcap/quadrature.hpp"
#include "fadcap/spectral_model.hpp"

namespace fadcap {

// Peak power constraint on |x_i|^2. Nonnegative; +infinity is accepted only
// where a routine documents it.
using PeakConstraint = double;

struct CapacityResult {
    double c_p = 0;    // capacity per unit energy, nats per unit energy
    double i_of_p = 0; // information rate integral I(P)
    double u_p = 0;    // quadratic upper bound, may be +infinity
    double quad_err = 0;
    double norm_dev = 0;           // |integral of S - 1| diagnostic
    bool limit_convention = false; // value fixed by a documented limit (P=0, P=inf, rho=0)
};

struct TimeBounds {
    double coherent_bound;  // P_avg
    double energy_bound;    // P_avg * c_p(beta*P_avg)
    double fourthegy_bound; // P_avg * U_p(beta*P_avg), quadratic in P_avg
};

// I(P) = integral of log(1 + P S(omega)) d omega/(2 pi) over the model's
// frequency domain. The result reports the achieved absolute error
// (target abs_tol) and a convergence flag. Rejects block fading; the
// continuous rho=0 limit returns its limit value I = P exactly.
QuadResult information_rate_integral(const SpectralModel& m, PeakConstraint P,
                                     double abs_tol = 1e-10);

// c_p = 1 - I(P)/P with peak constraint P. P=0 returns c_p=0 and P=+inf
// returns c_p=1, both flagged as limit conventions. Block fading routes to
// the closed form. Throws quadrature_error if the integral does not reach
// abs_tol.
CapacityResult cap_per_unit_energy(const SpectralModel& m, PeakConstraint P,
                                   double abs_tol = 1e-10);

// U_p = (P/2) * integral of S^2 d omega/(2 pi). Clarke's integral diverges
// and is reported as +infinity. Block fading uses the quadratic bound P*T/2.
// Requires finite P.
double upper_bound_up(const SpectralModel& m, PeakConstraint P);

// integral of S^2 d omega/(2 pi); by Parseval this equals the lag-energy sum
// of the autocorrelation. +infinity for Clarke.
double spectral_energy(const SpectralModel& m);

// Closed forms. Each equals the quadrature route to roundoff on its domain.
//
// Discrete: I = log z where z is the larger root of
//   z^2 - (1 + P + rho^2 (1 - P)) z + rho^2 = 0;
// the discriminant is evaluated in the factored form
//   (1-rho^2) * ((1-rho^2)(1+P^2) + 2P(1+rho^2))
// which is exact algebra and free of the catastrophic cancellation the
// direct b^2 - 4 rho^2 suffers as rho -> 1.
// Continuous: I = sqrt(log^2 rho - 2 P log rho) + log rho, computed in the
// rationalized form 2P|log rho| / (sqrt(..) + |log rho|).
// P=0 and (continuous) rho=0 return their limit values 0.
double gauss_markov_cp_closed(double rho, PeakConstraint P, TimeDomain domain);
double gauss_markov_info_rate_closed(double rho, PeakConstraint P, TimeDomain domain);

// Closed form for the Clarke spectrum, exact for the normalized density
// S(omega) = (1 - (omega/pi)^2)^(-1/2) on |omega| < pi, i.e. unit peak
// density with the Doppler edge scaled to pi. Its argument a is that
// normalized peak parameter. For a physical unit-variance Clarke model with
// Doppler f_m, 1 - I(P)/P from quadrature equals
//   1 - (2 f_m / P) * T(P / (pi f_m))   with  T(a) = a (1 - clarke_cp_closed(a)),
// which this closed form does not reduce to for any single f_m; see
// cap_per_unit_energy for the physical route.
//   a >= 1: g = sqrt(1 - a^-2) * acos(1/a)
//   a <  1: g = -sqrt(a^-2 - 1) * atanh(sqrt(1 - a^2))
//   result = g - log(a/2)/a + 1 - pi/2
// The two branches join continuously at a = 1 (g = 0).
double clarke_cp_closed(double a);

// Block fading, coherence length T: c_p = 1 - log(1 + P T)/(P T).
double block_cp_closed(PeakConstraint P, double T);

// Perfect receiver side information makes capacity per unit energy exactly 1.
double coherent_cp();

// Per-unit-time bounds at average power p_avg with peak-to-average ratio
// beta >= 1 (peak P = beta * p_avg):
//   coherent_bound  = p_avg
//   energy_bound    = p_avg * c_p(beta p_avg)   (<= coherent_bound)
//   fourthegy_bound = p_avg * U_p(beta p_avg)   (quadratic in p_avg)
TimeBounds cap_per_unit_time_bounds(const SpectralModel& m, double p_avg, double beta,
                                    double abs_tol = 1e-10);

} // namespace fadcap

#endif
