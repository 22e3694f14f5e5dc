#ifndef FADCAP_SPECTRAL_MODEL_HPP
#define FADCAP_SPECTRAL_MODEL_HPP

#include <array>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "fadcap/quadrature.hpp"

namespace fadcap {

inline constexpr double infinite = std::numeric_limits<double>::infinity();

enum class TimeDomain { discrete, continuous };

enum class Kind {
    white,                   // S == 1 on [-pi, pi)
    gauss_markov_discrete,   // R(k) = rho^|k|
    gauss_markov_continuous, // R(t) = rho^|t|
    clarke,                  // isotropic scattering, max Doppler f_m
    block_fading,            // constant over blocks of length T, no density
    tabulated_discrete,      // piecewise-linear table on [-pi, pi]
    tabulated_continuous,    // piecewise-linear table, finite support
};

// Unit-variance fading spectrum plus the couple of facts the numerical layers
// need from it: pointwise density, autocorrelation, certified integration over
// its frequency domain, and a tail bound for aliasing sums. Immutable value
// type; invalid parameters are rejected at construction.
class SpectralModel {
public:
    static SpectralModel white();
    // rho in [0, 1). Discrete rho=0 is white. Continuous rho=0 is the
    // memoryless limit: it has no spectral density (the variance escapes to
    // infinite bandwidth) and capacity routines treat it by its limit values.
    static SpectralModel gauss_markov(double rho, TimeDomain domain);
    // Unit-variance Clarke spectrum with maximum Doppler shift f_m > 0 (Hz):
    // S(2 pi f) = (1/(pi f_m)) (1-(f/f_m)^2)^(-1/2) for |f| < f_m, else 0.
    static SpectralModel clarke(double f_m);
    // Coherence length T > 0; represented by the parameter alone.
    static SpectralModel block_fading(double T, TimeDomain domain = TimeDomain::discrete);
    // Strictly increasing (frequency, density) samples, density >= 0,
    // interpreted piecewise-linearly and zero outside the table range.
    // Discrete tables must lie inside [-pi, pi]. Without `renormalize` the
    // trapezoid integral over the range must equal 2*pi (unit variance) to
    // 1e-9; with it the table is scaled and the scale is recorded.
    static SpectralModel tabulated(std::vector<std::array<double, 2>> samples,
                                   TimeDomain domain, bool renormalize = false);
    // Two-column text file: frequency density, '#' comments, optional header
    // line, comma or whitespace separated.
    static SpectralModel tabulated_from_file(const std::string& path,
                                             TimeDomain domain, bool renormalize = false);

    Kind kind() const { return kind_; }
    TimeDomain domain() const { return domain_; }
    std::string name() const;

    double rho() const { return rho_; }       // Gauss-Markov kinds
    double doppler() const { return f_m_; }   // Clarke
    double block_length() const { return block_T_; }
    double applied_scale() const { return scale_; } // 1 unless renormalized

    // False for block fading and for the continuous rho=0 limit.
    bool has_density() const;

    // Spectral density at omega. Discrete kinds require omega in [-pi, pi);
    // tabulated kinds require omega inside the table range.
    double density(double omega) const;

    // density() with value 0 outside the support instead of a domain error;
    // aliasing sums walk far outside the table range.
    double density_or_zero(double omega) const;

    // R(lag). Discrete kinds take integer lags. Real for every parametric
    // kind; throws domain_error when an asymmetric table makes it complex
    // (use autocorrelation_c for those).
    double autocorrelation(double lag) const;
    std::complex<double> autocorrelation_c(double lag) const;

    // Integral of g(omega, S(omega)) d omega/(2 pi) over the support,
    // optionally clipped to |omega| <= cut. g must vanish where S vanishes;
    // the quadrature never leaves the support. Continuous Gauss-Markov maps
    // the real line through omega = |log rho| tan(u); Clarke uses
    // f = f_m sin(theta), which absorbs the edge singularity.
    QuadResult integrate(const std::function<double(double, double)>& g,
                         double abs_tol = 1e-10, double cut = infinite) const;

    // sup{|omega| : S(omega) != 0}; infinite for continuous Gauss-Markov.
    double support_radius() const;

    // Aliasing tail certificate: S(x) <= c2/x^2 for all |x| >= from.
    // False when no such bound is available.
    bool quadratic_tail(double& c2, double& from) const;

private:
    SpectralModel() = default;

    Kind kind_ = Kind::white;
    TimeDomain domain_ = TimeDomain::discrete;
    double rho_ = 0, f_m_ = 0, block_T_ = 0, scale_ = 1;
    std::vector<std::array<double, 2>> table_;
};

// Parse helper shared by tabulated_from_file and tests.
std::vector<std::array<double, 2>> parse_spectrum_table(const std::string& path);

} // namespace fadcap

#endif
