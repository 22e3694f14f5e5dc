#ifndef FADCAP_QUADRATURE_HPP
#define FADCAP_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace fadcap {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;     // conservative absolute error estimate
    bool converged = false; // error <= requested tolerance
    std::int64_t evals = 0; // integrand evaluations
};

// Adaptive Gauss-Kronrod (G7,K15) over the union of [breakpoints[i],
// breakpoints[i+1]]. Breakpoints must be finite and non-decreasing; callers
// place them at spectral peaks and support edges so the subdivision starts
// where the integrand is hardest. Nodes are strictly interior, so integrable
// endpoint behavior is fine as long as f is finite at every node.
QuadResult gk_adaptive(const std::function<double(double)>& f,
                       std::vector<double> breakpoints,
                       double abs_tol,
                       int max_intervals = 20000);

} // namespace fadcap

#endif
