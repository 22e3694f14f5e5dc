#ifndef FADCAP_LINALG_HPP
#define FADCAP_LINALG_HPP

#include <complex>
#include <vector>

namespace fadcap {

using cdouble = std::complex<double>;

// In-place lower Cholesky of the Hermitian positive-definite matrix stored
// row-major in a (n x n, upper triangle ignored). Returns log det computed in
// log space from the pivots. Every pivot (the squared diagonal entry, before
// the square root) must exceed pivot_floor or psd_error is thrown.
double cholesky_logdet_inplace(std::vector<cdouble>& a, int n, double pivot_floor);

// Solve A x = b in place using the factor produced above.
void cholesky_solve_inplace(const std::vector<cdouble>& chol, int n, std::vector<cdouble>& b);

} // namespace fadcap

#endif
