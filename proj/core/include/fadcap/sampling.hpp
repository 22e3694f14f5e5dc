#ifndef FADCAP_SAMPLING_HPP
#define FADCAP_SAMPLING_HPP

#include "fadcap/capacity.hpp"
#include "fadcap/spectral_model.hpp"

namespace fadcap {

// sin(omega/2)/(omega/2): frequency response of the unit-interval matched
// filter. The removable singularity is handled by series below |omega| = 1e-4.
double sinc(double omega);

// One dyadic step of the continuous-to-discrete reduction: sample at rate
// 2^K after a matched filter of width 2^-K.
struct SamplingLimit {
    int K = 0;
    double b_k = 0;   // variance of the filtered fading process, in (0, 1]
    double i_k = 0;   // information rate integral of the reduced channel
    double cp_kk = 0; // b_k - i_k / P; converges to the continuous c_p
};

// Aliased matched-filter spectrum at omega in [-pi, pi]:
//   2^K sum_n S(2^K (omega - 2 pi n)) sinc^2(omega - 2 pi n),
// truncated once a per-model tail certificate puts the neglected remainder
// below 1e-12 (compact support cuts the sum exactly; a quadratic tail
// S(x) <= c2/x^2 bounds it by 4 c2 / (3 2^K pi^4 (2N-1)^3)). Requires a
// continuous model with a density; throws when no certificate exists.
double aliased_spectrum(const SpectralModel& m, int K, double omega);

// b_K = integral of S(omega) sinc^2(omega 2^-K) d omega/(2 pi): the variance
// surviving the filter. Increases toward 1 as K grows.
double sampled_variance(const SpectralModel& m, int K);

// I_K = 2^K integral over [-pi, pi] of log(1 + P 2^-K S~_K) d omega/(2 pi),
// evaluated in the stretched coordinate u = 2^K omega where the central
// aliasing term keeps the width of the underlying spectrum. Converges to
// the continuous information rate integral as K grows.
double sampled_info_rate(const SpectralModel& m, int K, PeakConstraint P);

// Full reduction step: cp_kk = b_K - I_K / P. The reduced discrete channel
// has variance b_K rather than 1 and peak P 2^-K, so b_K replaces the
// leading 1 of the unit-variance capacity formula. cp_kk <= 1, and
// cp_kk -> cap_per_unit_energy as K grows.
SamplingLimit cp_refinement(const SpectralModel& m, int K, PeakConstraint P);

} // namespace fadcap

#endif
