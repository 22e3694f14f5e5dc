#ifndef FADCAP_TOOLS_VERIFY_HPP
#define FADCAP_TOOLS_VERIFY_HPP

#include <cstdint>
#include <string>

namespace fadcap_cli {

// Numerical verification suites exercising the Toeplitz and sampling layers
// against independent routes. Each check prints one line
//   <name> observed=<value> tol=<value> pass|fail
// and the run exits 0 only if every check passes.
struct VerifyOptions {
    std::string suite = "all"; // szego | subsets | coherent | sampling | all
    double rho = 0.9;
    double P = 1.0;
    int n = 0; // 0 picks the suite default (4096 szego, 12 subsets)
    int trials = 100;
    int K = 12;
    std::uint64_t seed = 1;
    double quad_tol = 1e-10;
};

int run_verify(const VerifyOptions& opt);

} // namespace fadcap_cli

#endif
