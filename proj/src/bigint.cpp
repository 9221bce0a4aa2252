#include "sumprod/bigint.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sumprod {

BigInt BigInt::from_string(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    if (body.empty()) throw std::invalid_argument("integer literal is empty: '" + std::string(s) + "'");
    for (char c : body)
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad integer literal: '" + std::string(s) + "'");
    BigInt r;
    std::string buf(s);
    if (mpz_set_str(r.v_, buf.c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + std::string(s) + "'");
    return r;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in 64 bits: " + to_string());
    return mpz_get_si(v_);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigInt r;
    mpz_tdiv_q(r.v_, a.v_, b.v_);
    return r;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    BigInt r;
    mpz_tdiv_r(r.v_, a.v_, b.v_);
    return r;
}

std::string BigInt::to_string() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::size_t BigInt::hash() const {
    // FNV-1a over limbs plus the sign; canonical mpz representation makes
    // this agree with mathematical equality.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(mpz_sgn(v_) + 1));
    const mp_size_t n = mpz_size(v_);
    for (mp_size_t i = 0; i < n; ++i) mix(static_cast<std::size_t>(mpz_getlimbn(v_, i)));
    return h;
}

}  // namespace sumprod
