#include "fadcap/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "fadcap/errors.hpp"

namespace fadcap {
namespace {

// Prediction-error pivots E_0..E_{n-1} of the Hermitian Toeplitz matrix
// generated by c (Levinson-Durbin). E_k equals the Cholesky pivot
// D_{k+1}/D_k, so sum log E_k = log det; the recursion is O(n^2) and never
// forms the matrix.
std::vector<double> levinson_pivots(const std::vector<cdouble>& c, int n) {
    std::vector<double> E(n);
    const double c0 = c[0].real();
    if (!(c0 > 0.0)) throw psd_error("levinson: leading entry not positive");
    E[0] = c0;
    std::vector<cdouble> a(n, 0.0), prev(n, 0.0); // predictor taps, 1-based
    for (int k = 1; k < n; ++k) {
        cdouble acc = c[k];
        for (int j = 1; j < k; ++j) acc -= a[j] * c[k - j];
        const cdouble kappa = acc / E[k - 1];
        const double e = E[k - 1] * (1.0 - std::norm(kappa));
        if (!(e > 0.0) || !std::isfinite(e))
            throw psd_error("levinson: recursion broke down (matrix not positive definite)");
        std::copy(a.begin() + 1, a.begin() + k, prev.begin() + 1);
        for (int j = 1; j < k; ++j) a[j] = prev[j] - kappa * std::conj(prev[k - j]);
        a[k] = kappa;
        E[k] = e;
    }
    return E;
}

// Hermitian Toeplitz entry (i, j) = R_H(i - j).
cdouble gram_entry(const ToeplitzGram& g, int i, int j) {
    return i >= j ? g.first_row[i - j] : std::conj(g.first_row[j - i]);
}

void check_gram(const ToeplitzGram& g, const char* who) {
    if (g.n < 1 || static_cast<int>(g.first_row.size()) != g.n)
        throw domain_error(std::string(who) + ": malformed gram");
}

void check_peak(double P, bool positive, const char* who) {
    if (std::isnan(P) || P < 0.0 || !std::isfinite(P) || (positive && P == 0.0))
        throw domain_error(std::string(who) + (positive ? ": P must be positive and finite"
                                                        : ": P must be finite and nonnegative"));
}

void check_support(const SupportSet& A, int n, const char* who) {
    int prev = -1;
    for (int t : A) {
        if (t < 0 || t >= n)
            throw domain_error(std::string(who) + ": support index out of range");
        if (t <= prev)
            throw domain_error(std::string(who) + ": support must be strictly increasing");
        prev = t;
    }
}

SupportSet mask_to_set(std::uint32_t mask, int n, int shift = 0) {
    SupportSet A;
    for (int t = 0; t < n; ++t)
        if (mask >> t & 1u) A.push_back(t + shift);
    return A;
}

} // namespace

ToeplitzGram build_gram(const SpectralModel& m, int n) {
    if (m.domain() != TimeDomain::discrete)
        throw domain_error("build_gram: discrete-time model required");
    if (n < 1) throw domain_error("build_gram: n must be >= 1");
    ToeplitzGram g;
    g.n = n;
    g.first_row.resize(n);
    for (int k = 0; k < n; ++k) g.first_row[k] = m.autocorrelation_c(k);
    if (std::abs(g.first_row[0] - 1.0) > 1e-8)
        throw domain_error("build_gram: autocorrelation at lag 0 is not 1 (variance off)");
    g.first_row[0] = 1.0;
    // certificate: Cholesky pivots of I + Sigma never drop below the
    // eigenvalue floor 1
    std::vector<cdouble> c = g.first_row;
    c[0] += 1.0;
    const std::vector<double> piv = levinson_pivots(c, n);
    for (int k = 0; k < n; ++k) {
        if (piv[k] < 1.0 - 1e-10) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "build_gram: pivot %.6g at index %d below the unit floor "
                          "(tabulated spectrum is not a valid density)",
                          piv[k], k);
            throw psd_error(buf);
        }
    }
    return g;
}

double log_det_rate(const ToeplitzGram& gram, PeakConstraint P, LogDetMethod method) {
    check_gram(gram, "log_det_rate");
    check_peak(P, true, "log_det_rate");
    const int n = gram.n;
    if (method == LogDetMethod::levinson) {
        std::vector<cdouble> c = gram.first_row;
        for (cdouble& v : c) v *= P;
        c[0] += 1.0;
        double s = 0.0;
        for (double e : levinson_pivots(c, n)) s += std::log(e);
        return s / n;
    }
    if (n > 2048)
        throw domain_error("log_det_rate: cholesky method capped at n = 2048; use levinson");
    std::vector<cdouble> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            a[static_cast<std::size_t>(i) * n + j] =
                P * gram_entry(gram, i, j) + (i == j ? 1.0 : 0.0);
    // eigenvalues of I + P Sigma are >= 1; a pivot near the floor means the
    // input was no gram at all
    return cholesky_logdet_inplace(a, n, 0.5) / n;
}

PredictionTrace prediction_trace(const SpectralModel& m, PeakConstraint P, int n) {
    if (n < 1) throw domain_error("prediction_trace: n must be >= 1");
    check_peak(P, true, "prediction_trace");
    const ToeplitzGram g = build_gram(m, n + 1);
    std::vector<cdouble> c = g.first_row;
    for (cdouble& v : c) v *= P;
    c[0] += 1.0;
    PredictionTrace t;
    t.sigma2 = levinson_pivots(c, n + 1);
    t.log_det_rates.resize(n + 1);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        acc += std::log(t.sigma2[k]);
        t.log_det_rates[k] = acc / (k + 1);
    }
    return t;
}

double alpha(const ToeplitzGram& gram, PeakConstraint P, const SupportSet& A) {
    check_gram(gram, "alpha");
    check_peak(P, false, "alpha");
    check_support(A, gram.n, "alpha");
    const int s = static_cast<int>(A.size());
    if (s == 0) return 0.0;
    std::vector<cdouble> a(static_cast<std::size_t>(s) * s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j <= i; ++j)
            a[static_cast<std::size_t>(i) * s + j] =
                P * gram_entry(gram, A[i], A[j]) + (i == j ? 1.0 : 0.0);
    return cholesky_logdet_inplace(a, s, 0.5);
}

double onoff_divergence(const ToeplitzGram& gram, PeakConstraint P, const SupportSet& A) {
    return P * static_cast<double>(A.size()) - alpha(gram, P, A);
}

SubsetSearchResult subset_search(const SpectralModel& m, PeakConstraint P, int n, int max_n) {
    if (max_n < 1 || max_n > 25)
        throw domain_error("subset_search: cap must lie in 1..25");
    if (n < 1) throw domain_error("subset_search: n must be >= 1");
    if (n > max_n) throw domain_error("subset_search: n above cap");
    check_peak(P, true, "subset_search");
    const ToeplitzGram g = build_gram(m, n);

    // Depth-first enumeration in lexicographic order; the factor of
    // I + P Sigma[A, A] grows one row per pushed index, so each subset costs
    // one forward substitution. Pruning (only past the plain-enumeration
    // size) uses the monotonicity bound: every extension E of A satisfies
    // alpha(E)/|E| >= alpha(A)/(largest reachable size). A pruned branch can
    // at best tie, and ties never displace the earlier, lexicographically
    // smaller argmin.
    SubsetSearchResult out;
    out.min_rate = infinite;
    const bool prune = n > 15;
    SupportSet cur;
    std::vector<std::vector<cdouble>> rows;
    std::vector<double> logdets;

    auto push = [&](int t) {
        const int r = static_cast<int>(rows.size());
        std::vector<cdouble> row(r + 1);
        for (int s = 0; s < r; ++s) {
            cdouble v = P * gram_entry(g, t, cur[s]);
            for (int q = 0; q < s; ++q) v -= row[q] * std::conj(rows[s][q]);
            row[s] = v / rows[s][s].real();
        }
        double d = 1.0 + P;
        for (int s = 0; s < r; ++s) d -= std::norm(row[s]);
        if (!(d > 0.5)) throw psd_error("subset_search: pivot fell below the unit floor");
        row[r] = std::sqrt(d);
        const double ld = (logdets.empty() ? 0.0 : logdets.back()) + std::log(d);
        rows.push_back(std::move(row));
        logdets.push_back(ld);
        cur.push_back(t);
        return ld;
    };
    auto pop = [&] {
        rows.pop_back();
        logdets.pop_back();
        cur.pop_back();
    };

    std::function<void(int)> dfs = [&](int start) {
        for (int t = start; t < n; ++t) {
            const double ld = push(t);
            ++out.visited;
            const double ratio = ld / static_cast<double>(cur.size());
            if (ratio < out.min_rate) {
                out.min_rate = ratio;
                out.argmin = cur;
            }
            bool descend = t + 1 < n;
            if (descend && prune &&
                ld / static_cast<double>(cur.size() + (n - 1 - t)) >= out.min_rate)
                descend = false;
            if (descend) dfs(t + 1);
            pop();
        }
    };
    dfs(0);
    return out;
}

double AlphaPropertyReport::max_violation() const {
    return std::max(std::max(empty_dev, monotone_violation),
                    std::max(submodular_violation, shift_violation));
}

AlphaPropertyReport verify_alpha_properties(const SpectralModel& m, PeakConstraint P,
                                            int n, int max_shift) {
    if (n < 1 || n > 10)
        throw domain_error("verify_alpha_properties: n must lie in 1..10");
    if (max_shift < 0 || max_shift > 8)
        throw domain_error("verify_alpha_properties: max_shift must lie in 0..8");
    check_peak(P, false, "verify_alpha_properties");
    const ToeplitzGram g = build_gram(m, n);
    const std::uint32_t full = 1u << n;
    std::vector<double> val(full, 0.0);
    for (std::uint32_t mask = 1; mask < full; ++mask)
        val[mask] = alpha(g, P, mask_to_set(mask, n));

    AlphaPropertyReport r;
    r.empty_dev = std::fabs(alpha(g, P, {}));
    for (std::uint32_t d = 1; d < full; ++d)
        for (std::uint32_t c = (d - 1) & d;; c = (c - 1) & d) {
            r.monotone_violation = std::max(r.monotone_violation, val[c] - val[d]);
            if (c == 0) break;
        }
    for (std::uint32_t a = 1; a < full; ++a)
        for (std::uint32_t b = a; b < full; ++b)
            r.submodular_violation =
                std::max(r.submodular_violation, val[a | b] + val[a & b] - val[a] - val[b]);
    if (max_shift > 0) {
        const ToeplitzGram big = build_gram(m, n + max_shift);
        for (std::uint32_t mask = 1; mask < full; ++mask)
            for (int k = 1; k <= max_shift; ++k)
                r.shift_violation =
                    std::max(r.shift_violation,
                             std::fabs(alpha(big, P, mask_to_set(mask, n, k)) - val[mask]));
    }
    return r;
}

double coherent_divergence(const std::vector<cdouble>& X, const SpectralModel& m,
                           PeakConstraint P) {
    const int T = static_cast<int>(X.size());
    if (T < 1) throw domain_error("coherent_divergence: X must be nonempty");
    check_peak(P, false, "coherent_divergence");
    for (const cdouble& x : X)
        if (std::norm(x) > P * (1.0 + 1e-12))
            throw domain_error("coherent_divergence: peak constraint violated");
    const ToeplitzGram g = build_gram(m, T);

    std::vector<cdouble> sig(static_cast<std::size_t>(T) * T);
    for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j) sig[static_cast<std::size_t>(i) * T + j] = gram_entry(g, i, j);
    std::vector<cdouble> chol = sig;
    const double logdet_sigma = cholesky_logdet_inplace(chol, T, 0.0);

    // trace of Sigma0^{-1} Sigma_X: the identity block contributes the
    // diagonal of diag(X) Sigma diag(X)^H + I directly, the fading block is
    // resolved by solves (analytically T, computed numerically on purpose)
    double trace = 0.0;
    for (int i = 0; i < T; ++i)
        trace += 1.0 + std::norm(X[i]) * sig[static_cast<std::size_t>(i) * T + i].real();
    std::vector<cdouble> col(T);
    for (int j = 0; j < T; ++j) {
        for (int i = 0; i < T; ++i) col[i] = sig[static_cast<std::size_t>(i) * T + j];
        cholesky_solve_inplace(chol, T, col);
        trace += col[j].real();
    }

    // stacked covariance of (output, fading) under input X
    const int N = 2 * T;
    std::vector<cdouble> big(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j) {
            const cdouble s = sig[static_cast<std::size_t>(i) * T + j];
            big[static_cast<std::size_t>(i) * N + j] =
                X[i] * s * std::conj(X[j]) + (i == j ? 1.0 : 0.0);
            big[static_cast<std::size_t>(i) * N + (T + j)] = X[i] * s;
            big[static_cast<std::size_t>(T + i) * N + j] = s * std::conj(X[j]);
            big[static_cast<std::size_t>(T + i) * N + (T + j)] = s;
        }
    const double logdet_big = cholesky_logdet_inplace(big, N, 0.0);

    return trace - N + logdet_sigma - logdet_big;
}

double fourthegy(const std::vector<cdouble>& X, const SpectralModel& m) {
    const int T = static_cast<int>(X.size());
    if (T == 0) return 0.0;
    const ToeplitzGram g = build_gram(m, T);
    std::vector<double> p(T), r2(T);
    for (int i = 0; i < T; ++i) p[i] = std::norm(X[i]);
    for (int k = 0; k < T; ++k) r2[k] = std::norm(g.first_row[k]);
    double j_c = 0.0;
    for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j) j_c += p[i] * p[j] * r2[std::abs(i - j)];
    return j_c;
}

double fourthegy_bound(const std::vector<cdouble>& X, const SpectralModel& m,
                       PeakConstraint P) {
    check_peak(P, false, "fourthegy_bound");
    double e2 = 0.0;
    for (const cdouble& x : X) {
        const double q = std::norm(x);
        if (q > P * (1.0 + 1e-12))
            throw domain_error("fourthegy_bound: peak constraint violated");
        e2 += q;
    }
    if (e2 == 0.0 || P == 0.0) return 0.0;
    const double se = spectral_energy(m);
    return std::isfinite(se) ? e2 * P * se : infinite;
}

} // namespace fadcap
