#ifndef FADCAP_ERRORS_HPP
#define FADCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fadcap {

// Base class for all library failures. Everything thrown on purpose derives
// from this so the CLI can map failures to exit codes in one place.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters or a query outside the model's frequency domain.
struct domain_error : error {
    using error::error;
};

// Adaptive integration stopped above the requested tolerance. The achieved
// absolute error estimate is kept so callers can report it.
struct quadrature_error : error {
    double achieved;
    quadrature_error(const std::string& what, double achieved_err)
        : error(what), achieved(achieved_err) {}
};

// Gram matrix failed its positive-semidefiniteness certificate, or a
// factorization broke down. Signals a bad tabulated spectrum.
struct psd_error : error {
    using error::error;
};

} // namespace fadcap

#endif
