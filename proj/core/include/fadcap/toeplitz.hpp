#ifndef FADCAP_TOEPLITZ_HPP
#define FADCAP_TOEPLITZ_HPP

#include <cstdint>
#include <vector>

#include "fadcap/capacity.hpp"
#include "fadcap/linalg.hpp"
#include "fadcap/spectral_model.hpp"

namespace fadcap {

// Hermitian Toeplitz fading gram Sigma_n: unit diagonal, generated by the
// autocorrelation row R_H(0..n-1).
struct ToeplitzGram {
    int n = 0;
    std::vector<cdouble> first_row; // first_row[k] = R_H(k), first_row[0] = 1
};

// Set of ON times: strictly increasing nonnegative indices, no duplicates.
using SupportSet = std::vector<int>;

// Assemble the n x n gram of a discrete-time model and certify positive
// semidefiniteness: the prediction pivots of I + Sigma (its Cholesky pivots)
// must stay >= 1 - 1e-10. A violation signals a bad tabulated spectrum.
ToeplitzGram build_gram(const SpectralModel& m, int n);

enum class LogDetMethod { cholesky, levinson };

// (1/n) log det(I_n + P Sigma_n), always accumulated in log space from
// pivots. The levinson method runs the prediction-error recursion on
// R_Z(k) = P R_H(k) + [k=0] in O(n^2); cholesky factors the dense matrix
// (O(n^3), capped at n <= 2048). The two agree to 1e-8.
double log_det_rate(const ToeplitzGram& gram, PeakConstraint P,
                    LogDetMethod method = LogDetMethod::levinson);

// One-step prediction errors of the observed process Z with
// R_Z = P R_H + delta. sigma2[k] is the error after k past observations,
// equal to the determinant ratio D_{k+1}/D_k; sigma2[0] = 1 + P and the
// sequence decreases toward exp(I(P)). log_det_rates[k-1] = (log D_k)/k for
// k = 1..n+1, non-increasing toward I(P).
struct PredictionTrace {
    std::vector<double> sigma2;        // k = 0..n
    std::vector<double> log_det_rates; // k = 1..n+1
};
PredictionTrace prediction_trace(const SpectralModel& m, PeakConstraint P, int n);

// alpha(A) = log det(I + P Sigma[A, A]); alpha(empty) = 0.
double alpha(const ToeplitzGram& gram, PeakConstraint P, const SupportSet& A);

// P|A| - alpha(A): divergence cost of the ON-OFF input supported on A.
// Nonnegative, since alpha(A) <= tr(P Sigma[A, A]) = P|A|.
double onoff_divergence(const ToeplitzGram& gram, PeakConstraint P, const SupportSet& A);

struct SubsetSearchResult {
    double min_rate = 0;       // min over nonempty A of alpha(A)/|A|
    SupportSet argmin;         // lexicographically smallest minimizer
    std::uint64_t visited = 0; // subsets actually scored
};

// Exact minimum of alpha(A)/|A| over every nonempty A in {0..n-1}, by
// depth-first enumeration in lexicographic order with an incremental
// Cholesky factor. Plain enumeration for n <= 15; above that, branch and
// bound with the monotonicity lower bound alpha(A)/(largest reachable
// size), which never discards a strictly better set. n is capped at max_n.
SubsetSearchResult subset_search(const SpectralModel& m, PeakConstraint P, int n,
                                 int max_n = 20);

// Exhaustive numerical check of the set-function facts behind the ON-OFF
// reduction, over every subset pair of {0..n-1} (n <= 10):
//   (i) alpha(empty) = 0, (ii) monotone under inclusion, (iii) submodular,
//   (iv) invariant under shifts by 1..max_shift inside a window of
//        n + max_shift slots.
// Each field is the worst signed violation found (<= 0 means the property
// held everywhere up to roundoff).
struct AlphaPropertyReport {
    double empty_dev = 0;
    double monotone_violation = 0;
    double submodular_violation = 0;
    double shift_violation = 0;
    double max_violation() const;
};
AlphaPropertyReport verify_alpha_properties(const SpectralModel& m, PeakConstraint P,
                                            int n, int max_shift = 4);

// Divergence between the side-information channel outputs under input X and
// input 0, computed numerically from the stacked covariance of (output,
// fading): log-det ratio plus trace term of the 2T-dimensional proper
// Gaussians. Equal to |X|^2 (squared Euclidean norm) identically; returning
// the numerical value lets tests confirm the identity. Requires
// max_i |X_i|^2 <= P and a nonsingular fading gram.
double coherent_divergence(const std::vector<cdouble>& X, const SpectralModel& m,
                           PeakConstraint P);

// Fourth-moment energy functional
//   J_C(X) = sum_{i,j} |X_i|^2 |X_j|^2 |R_H(i-j)|^2.
double fourthegy(const std::vector<cdouble>& X, const SpectralModel& m);

// Upper bound |X|^2 * P * integral of S^2 d omega/(2 pi), valid whenever
// max_i |X_i|^2 <= P (Parseval turns the inner lag sum into the S^2
// integral). +infinity when the spectral energy diverges.
double fourthegy_bound(const std::vector<cdouble>& X, const SpectralModel& m,
                       PeakConstraint P);

} // namespace fadcap

#endif
