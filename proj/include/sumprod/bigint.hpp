#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sumprod {

// Arbitrary-precision signed integer. Value-semantic wrapper over GMP's
// mpz_t with canonical zero, exact comparisons, and a hash that agrees with
// equality (required for exact set deduplication).
class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long long n) { mpz_init(v_); set_int64(n); }
    BigInt(int n) : BigInt(static_cast<long long>(n)) {}
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    // Strict decimal grammar: optional '-', then digits. Throws
    // std::invalid_argument on anything else (no whitespace, no '+').
    static BigInt from_string(std::string_view s);

    int signum() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }

    bool fits_int64() const { return mpz_fits_slong_p(v_) != 0; }
    long long to_int64() const;  // throws std::overflow_error if out of range
    double to_double() const { return mpz_get_d(v_); }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.v_, v_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    // Quotient/remainder truncate toward zero, matching built-in integers.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }
    // Exact division (caller guarantees divisibility).
    friend BigInt divexact(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_divexact(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt pow(const BigInt& base, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.v_, base.v_, e);
        return r;
    }
    // floor(sqrt(a)), a >= 0
    friend BigInt isqrt(const BigInt& a) {
        BigInt r;
        mpz_sqrt(r.v_, a.v_);
        return r;
    }

    std::strong_ordering operator<=>(const BigInt& o) const {
        int c = mpz_cmp(v_, o.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }
    bool operator==(const BigInt& o) const { return mpz_cmp(v_, o.v_) == 0; }

    std::string to_string() const;
    std::size_t hash() const;
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_, 2); }

    // value = mantissa * 2^exp with mantissa in [0.5, 1); used for ratio-safe
    // double conversion of huge fractions.
    double double_2exp(long* exp) const { return mpz_get_d_2exp(exp, v_); }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    void set_int64(long long n) { mpz_set_si(v_, static_cast<long>(n)); }
    mpz_t v_;
};

}  // namespace sumprod

template <>
struct std::hash<sumprod::BigInt> {
    std::size_t operator()(const sumprod::BigInt& v) const noexcept { return v.hash(); }
};
