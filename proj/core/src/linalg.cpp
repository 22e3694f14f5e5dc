#include "fadcap/linalg.hpp"

#include <cmath>
#include <cstdio>

#include "fadcap/errors.hpp"

namespace fadcap {

double cholesky_logdet_inplace(std::vector<cdouble>& a, int n, double pivot_floor) {
    double logdet = 0.0;
    for (int j = 0; j < n; ++j) {
        cdouble* rj = a.data() + static_cast<std::size_t>(j) * n;
        double d = rj[j].real();
        for (int k = 0; k < j; ++k) d -= std::norm(rj[k]);
        if (!(d > pivot_floor)) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "cholesky: pivot %.6g at index %d below floor %.6g (matrix not PD)",
                          d, j, pivot_floor);
            throw psd_error(buf);
        }
        logdet += std::log(d);
        const double ljj = std::sqrt(d);
        rj[j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            cdouble* ri = a.data() + static_cast<std::size_t>(i) * n;
            cdouble s = ri[j];
            for (int k = 0; k < j; ++k) s -= ri[k] * std::conj(rj[k]);
            ri[j] = s / ljj;
        }
    }
    return logdet;
}

void cholesky_solve_inplace(const std::vector<cdouble>& chol, int n, std::vector<cdouble>& b) {
    // L y = b
    for (int i = 0; i < n; ++i) {
        const cdouble* ri = chol.data() + static_cast<std::size_t>(i) * n;
        cdouble s = b[i];
        for (int k = 0; k < i; ++k) s -= ri[k] * b[k];
        b[i] = s / ri[i].real();
    }
    // L^H x = y
    for (int i = n - 1; i >= 0; --i) {
        cdouble s = b[i];
        for (int k = i + 1; k < n; ++k)
            s -= std::conj(chol[static_cast<std::size_t>(k) * n + i]) * b[k];
        b[i] = s / chol[static_cast<std::size_t>(i) * n + i].real();
    }
}

} // namespace fadcap
