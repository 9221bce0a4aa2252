#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sumprod/bigint.hpp"

namespace sumprod {

// Canonical exact rational: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
// Equality, ordering, and hashing agree with mathematical equality on Q.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(int n) : num_(n), den_(1) {}
    BigRational(BigInt num, BigInt den);  // normalizes; throws std::domain_error on den == 0
    static BigRational from_integer(BigInt n) {
        BigRational r;
        r.num_ = std::move(n);
        return r;
    }

    // Scalar grammar: INT | INT/POSINT | decimal  (e.g. "-3", "7/4", "0.25").
    static BigRational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int signum() const { return num_.signum(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    BigRational operator-() const;
    BigRational abs() const { return signum() < 0 ? -*this : *this; }
    BigRational reciprocal() const;  // throws std::domain_error on zero

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    std::strong_ordering operator<=>(const BigRational& o) const;
    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;  // "p" when integral, else "p/q"
    double to_double() const;
    std::size_t hash() const;

private:
    void reduce();
    BigInt num_;
    BigInt den_;
};

inline BigRational rat_normalize(BigInt num, BigInt den) {
    return BigRational(std::move(num), std::move(den));
}

}  // namespace sumprod

template <>
struct std::hash<sumprod::BigRational> {
    std::size_t operator()(const sumprod::BigRational& v) const noexcept { return v.hash(); }
};
