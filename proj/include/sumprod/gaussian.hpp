#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sumprod/rational.hpp"

namespace sumprod {

// Complex number with exact rational components. The ordering is the
// lexicographic (re, im) canonical order used for deterministic set storage,
// not a field order.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long long re) : re_(re) {}
    static GaussianRational from_real(BigRational re) { return GaussianRational(std::move(re), BigRational()); }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    BigRational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    // Exact quotient via conjugate multiplication; throws std::domain_error on w == 0.
    friend GaussianRational operator/(const GaussianRational& z, const GaussianRational& w);

    std::strong_ordering operator<=>(const GaussianRational& o) const {
        auto c = re_ <=> o.re_;
        return c != 0 ? c : im_ <=> o.im_;
    }
    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    std::string to_string() const { return "(" + re_.to_string() + "," + im_.to_string() + ")"; }
    std::size_t hash() const {
        std::size_t h = re_.hash();
        h ^= im_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    BigRational re_;
    BigRational im_;
};

inline GaussianRational gauss_div(const GaussianRational& z, const GaussianRational& w) { return z / w; }

// Open symmetric angular sector about the positive real axis, parameterized by
// the tangent of its half-opening angle so membership stays an exact rational
// sign test: z is a member iff re(z) > 0 and |im(z)| < slope_bound * re(z).
struct WedgeSpec {
    BigRational slope_bound;
    explicit WedgeSpec(BigRational bound);  // throws std::invalid_argument unless bound > 0
};

bool wedge_member(const GaussianRational& z, const WedgeSpec& w);

}  // namespace sumprod

template <>
struct std::hash<sumprod::GaussianRational> {
    std::size_t operator()(const sumprod::GaussianRational& v) const noexcept { return v.hash(); }
};
