#include "sumprod/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sumprod {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    reduce();
}

void BigRational::reduce() {
    if (den_.signum() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

BigRational BigRational::from_string(std::string_view s) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view n = s.substr(0, slash), d = s.substr(slash + 1);
        if (d.empty() || d.front() == '-') throw bad();  // POSINT denominator
        return BigRational(BigInt::from_string(n), BigInt::from_string(d));
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return from_integer(BigInt::from_string(s));
    // decimal: [-]digits.digits, exact value
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (neg) ip.remove_prefix(1);
    if (ip.empty() || fp.empty()) throw bad();
    for (std::string_view part : {ip, fp})
        for (char c : part)
            if (c < '0' || c > '9') throw bad();
    BigInt whole = BigInt::from_string(ip);
    BigInt frac = BigInt::from_string(fp);
    BigInt scale = pow(BigInt(10), static_cast<unsigned long>(fp.size()));
    BigInt num = whole * scale + frac;
    if (neg) num = -num;
    return BigRational(std::move(num), std::move(scale));
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    BigRational r;
    if (signum() < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return BigRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering BigRational::operator<=>(const BigRational& o) const {
    int sa = signum(), sb = o.signum();
    if (sa != sb) return sa <=> sb;
    // cross-multiplication against positive denominators; int64 fast path
    // covers the sort-heavy loops where values stay word-sized
    if (num_.fits_int64() && den_.fits_int64() && o.num_.fits_int64() && o.den_.fits_int64()) {
        __int128 l = static_cast<__int128>(num_.to_int64()) * o.den_.to_int64();
        __int128 r = static_cast<__int128>(o.num_.to_int64()) * den_.to_int64();
        return l < r ? std::strong_ordering::less
               : l > r ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }
    return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string BigRational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double BigRational::to_double() const {
    if (is_zero()) return 0.0;
    long en = 0, ed = 0;
    double mn = num_.double_2exp(&en);
    double md = den_.double_2exp(&ed);
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::size_t BigRational::hash() const {
    std::size_t h = num_.hash();
    h ^= den_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace sumprod
