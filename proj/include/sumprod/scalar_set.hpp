#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumprod/gaussian.hpp"
#include "sumprod/rational.hpp"

namespace sumprod {

enum class SetKind { real, complex };

struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact internal cross-check failed. The guarded facts are theorems, so
// this is always an implementation bug, never a property of the input.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite deduplicated set of exact scalars, real (BigRational) or complex
// (GaussianRational), stored sorted in canonical order (numeric for reals,
// lexicographic (re, im) for complexes) so every derived output is
// deterministic.
class ScalarSet {
public:
    ScalarSet() : kind_(SetKind::real) {}
    static ScalarSet of_reals(std::vector<BigRational> xs);
    static ScalarSet of_complexes(std::vector<GaussianRational> xs);

    SetKind kind() const { return kind_; }
    std::size_t size() const { return kind_ == SetKind::real ? reals_.size() : cplx_.size(); }
    bool empty() const { return size() == 0; }

    const std::vector<BigRational>& reals() const;
    const std::vector<GaussianRational>& complexes() const;

    bool contains(const BigRational& v) const;
    bool contains(const GaussianRational& v) const;

    ScalarSet lifted_to_complex() const;
    ScalarSet without_zero(std::uint64_t* removed = nullptr) const;

    std::string canonical_string() const;  // comma-joined canonical elements
    std::uint64_t digest() const;          // FNV-1a of kind + canonical_string

    bool operator==(const ScalarSet& o) const;

private:
    SetKind kind_;
    std::vector<BigRational> reals_;
    std::vector<GaussianRational> cplx_;
};

template <class T>
const std::vector<T>& set_elements(const ScalarSet& s);
template <>
inline const std::vector<BigRational>& set_elements<BigRational>(const ScalarSet& s) {
    return s.reals();
}
template <>
inline const std::vector<GaussianRational>& set_elements<GaussianRational>(const ScalarSet& s) {
    return s.complexes();
}

ScalarSet make_set(std::vector<BigRational> xs);
ScalarSet make_set(std::vector<GaussianRational> xs);

enum class PairOp { add, sub, mul, div };

struct SetOpOptions {
    std::size_t size_cap = 10'000'000;  // cap on the projected |X|*|Y| grid
    std::optional<std::size_t> early_exit_target;
};

struct PairwiseResult {
    ScalarSet set;
    std::uint64_t skipped_zero_divisors = 0;
};

// Exact elementwise set operation {x op y}. For div, pairs with a zero
// divisor are skipped and counted; an empty quotient set is an error.
PairwiseResult pairwise(const ScalarSet& x, const ScalarSet& y, PairOp op, const SetOpOptions& opt = {});

struct LowerBoundCertificate {
    std::size_t cardinality_lower_bound = 0;
    std::size_t target = 0;
    unsigned fold_reached = 0;  // j <= k: a j-fold iterate witnessed the bound
};

struct KfoldResult {
    std::optional<ScalarSet> set;
    std::optional<LowerBoundCertificate> certificate;
    bool exact() const { return set.has_value(); }
    std::size_t lower_bound() const {
        return set ? set->size() : certificate->cardinality_lower_bound;
    }
};

// k-fold sumset kX by binary doubling. With an early-exit target, returns a
// certificate as soon as any intermediate j-fold iterate reaches the target
// cardinality (sound since |X+Y| >= max(|X|,|Y|) for nonempty X, Y).
KfoldResult kfold_sum(const ScalarSet& x, unsigned k, const SetOpOptions& opt = {});

// k-fold product set X^(k) by binary doubling; always exact.
ScalarSet kfold_product(const ScalarSet& x, unsigned k, const SetOpOptions& opt = {});

// Representation counts of the ratio set Y/X: for each distinct ratio r,
// count(r) = |{(a,b) in X x Y : b/a = r}| plus one canonical witness pair.
template <class T>
struct RatioProfileEntry {
    T ratio;
    std::uint64_t count = 0;
    T rep_a;  // pair (a, b) with b / a = ratio
    T rep_b;
};

template <class T>
struct RatioProfile {
    std::vector<RatioProfileEntry<T>> entries;  // sorted by ratio
    std::uint64_t skipped_zero_denominators = 0;
    const RatioProfileEntry<T>* find(const T& ratio) const;
    std::uint64_t total_mass() const;
};

template <class T>
RatioProfile<T> ratio_profile(const ScalarSet& x, const ScalarSet& y);

extern template RatioProfile<BigRational> ratio_profile<BigRational>(const ScalarSet&, const ScalarSet&);
extern template RatioProfile<GaussianRational> ratio_profile<GaussianRational>(const ScalarSet&, const ScalarSet&);
extern template struct RatioProfile<BigRational>;
extern template struct RatioProfile<GaussianRational>;

}  // namespace sumprod
