#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace alperm {

using Complex = std::complex<double>;

/// Thrown when an enumeration or engine would run past its hard size guard
/// (factorial / Bell-number blowup). Guards fail loudly instead of truncating.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// alpha^k for small non-negative k by repeated multiplication.
inline Complex pow_int(Complex base, int k) {
    Complex p{1.0, 0.0};
    for (int i = 0; i < k; ++i) p *= base;
    return p;
}

/// |a-b| measured against max(|a|,|b|), with an absolute floor below which
/// the difference counts as zero. Used by every identity check.
inline double relative_error(Complex a, Complex b, double abs_floor = 1e-10) {
    const double diff = std::abs(a - b);
    if (diff <= abs_floor) return 0.0;
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? diff / scale : diff;
}

}  // namespace alperm
