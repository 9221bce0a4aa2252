#include "sumprod/gaussian.hpp"

#include <stdexcept>

namespace sumprod {

GaussianRational operator/(const GaussianRational& z, const GaussianRational& w) {
    if (w.is_zero()) throw std::domain_error("division by zero");
    BigRational n = w.norm_sq();
    GaussianRational t = z * w.conj();
    return GaussianRational(t.re() / n, t.im() / n);
}

WedgeSpec::WedgeSpec(BigRational bound) : slope_bound(std::move(bound)) {
    if (slope_bound.signum() <= 0) throw std::invalid_argument("wedge slope bound must be positive");
}

bool wedge_member(const GaussianRational& z, const WedgeSpec& w) {
    if (z.re().signum() <= 0) return false;
    return z.im().abs() < w.slope_bound * z.re();
}

}  // namespace sumprod
