#include "sumprod/scalar_set.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace sumprod {

namespace {

template <class T>
std::vector<T> canonicalize(std::vector<T> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::uint64_t fnv64(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

ScalarSet ScalarSet::of_reals(std::vector<BigRational> xs) {
    ScalarSet s;
    s.kind_ = SetKind::real;
    s.reals_ = canonicalize(std::move(xs));
    return s;
}

ScalarSet ScalarSet::of_complexes(std::vector<GaussianRational> xs) {
    ScalarSet s;
    s.kind_ = SetKind::complex;
    s.cplx_ = canonicalize(std::move(xs));
    return s;
}

ScalarSet make_set(std::vector<BigRational> xs) { return ScalarSet::of_reals(std::move(xs)); }
ScalarSet make_set(std::vector<GaussianRational> xs) { return ScalarSet::of_complexes(std::move(xs)); }

const std::vector<BigRational>& ScalarSet::reals() const {
    if (kind_ != SetKind::real) throw std::invalid_argument("expected a real set");
    return reals_;
}

const std::vector<GaussianRational>& ScalarSet::complexes() const {
    if (kind_ != SetKind::complex) throw std::invalid_argument("expected a complex set");
    return cplx_;
}

bool ScalarSet::contains(const BigRational& v) const {
    return std::binary_search(reals().begin(), reals().end(), v);
}

bool ScalarSet::contains(const GaussianRational& v) const {
    return std::binary_search(complexes().begin(), complexes().end(), v);
}

ScalarSet ScalarSet::lifted_to_complex() const {
    if (kind_ == SetKind::complex) return *this;
    std::vector<GaussianRational> out;
    out.reserve(reals_.size());
    for (const auto& r : reals_) out.push_back(GaussianRational::from_real(r));
    return of_complexes(std::move(out));
}

ScalarSet ScalarSet::without_zero(std::uint64_t* removed) const {
    std::uint64_t n = 0;
    ScalarSet out;
    if (kind_ == SetKind::real) {
        std::vector<BigRational> xs;
        xs.reserve(reals_.size());
        for (const auto& v : reals_) {
            if (v.is_zero())
                ++n;
            else
                xs.push_back(v);
        }
        out = of_reals(std::move(xs));
    } else {
        std::vector<GaussianRational> xs;
        xs.reserve(cplx_.size());
        for (const auto& v : cplx_) {
            if (v.is_zero())
                ++n;
            else
                xs.push_back(v);
        }
        out = of_complexes(std::move(xs));
    }
    if (removed) *removed = n;
    return out;
}

std::string ScalarSet::canonical_string() const {
    std::string s;
    if (kind_ == SetKind::real) {
        for (const auto& v : reals_) {
            if (!s.empty()) s += ",";
            s += v.to_string();
        }
    } else {
        for (const auto& v : cplx_) {
            if (!s.empty()) s += ",";
            s += v.to_string();
        }
    }
    return s;
}

std::uint64_t ScalarSet::digest() const {
    return fnv64(canonical_string(), fnv64(kind_ == SetKind::real ? "real" : "complex"));
}

bool ScalarSet::operator==(const ScalarSet& o) const {
    return kind_ == o.kind_ && reals_ == o.reals_ && cplx_ == o.cplx_;
}

namespace {

template <class T>
T apply_op(const T& a, const T& b, PairOp op) {
    switch (op) {
        case PairOp::add: return a + b;
        case PairOp::sub: return a - b;
        case PairOp::mul: return a * b;
        case PairOp::div: return a / b;
    }
    throw std::logic_error("unreachable");
}

// Core grid enumeration with deduplication. With a target, stops as soon as
// that many distinct values exist; `bailed` reports whether it stopped early.
template <class T>
std::vector<T> pairwise_vec(const std::vector<T>& xs, const std::vector<T>& ys, PairOp op,
                            const SetOpOptions& opt, std::uint64_t& skipped, bool& bailed) {
    bailed = false;
    const std::size_t projected = xs.size() * ys.size();
    if (!opt.early_exit_target && projected > opt.size_cap)
        throw size_cap_error("size cap exceeded: projected " + std::to_string(projected) +
                             " pairs over cap " + std::to_string(opt.size_cap));
    std::unordered_set<T> seen;
    seen.reserve(std::min(projected, opt.early_exit_target ? *opt.early_exit_target + 1 : projected));
    for (const T& a : xs) {
        for (const T& b : ys) {
            if (op == PairOp::div && b.is_zero()) {
                ++skipped;
                continue;
            }
            seen.insert(apply_op(a, b, op));
            if (opt.early_exit_target && seen.size() >= *opt.early_exit_target) {
                bailed = true;
                return {seen.begin(), seen.end()};
            }
        }
    }
    return {seen.begin(), seen.end()};
}

template <class T>
PairwiseResult pairwise_impl(const ScalarSet& x, const ScalarSet& y, PairOp op, const SetOpOptions& opt) {
    std::uint64_t skipped = 0;
    bool bailed = false;
    SetOpOptions exact_opt = opt;
    exact_opt.early_exit_target.reset();
    auto vals = pairwise_vec<T>(set_elements<T>(x), set_elements<T>(y), op, exact_opt, skipped, bailed);
    if (op == PairOp::div && vals.empty()) throw std::domain_error("empty result: every divisor is zero");
    return PairwiseResult{make_set(std::move(vals)), skipped};
}

}  // namespace

PairwiseResult pairwise(const ScalarSet& x, const ScalarSet& y, PairOp op, const SetOpOptions& opt) {
    if (x.kind() != y.kind()) throw std::invalid_argument("kind mismatch in set operation");
    if (x.empty() || y.empty()) throw std::invalid_argument("set operation on empty set");
    if (x.kind() == SetKind::real) return pairwise_impl<BigRational>(x, y, op, opt);
    return pairwise_impl<GaussianRational>(x, y, op, opt);
}

namespace {

// One doubling/addition step of the k-fold chains; returns nullopt when the
// early-exit target was hit mid-enumeration (certificate filled by caller).
template <class T>
std::optional<ScalarSet> chain_step(const ScalarSet& a, const ScalarSet& b, PairOp op,
                                    const SetOpOptions& opt, std::size_t& found) {
    std::uint64_t skipped = 0;
    bool bailed = false;
    auto vals = pairwise_vec<T>(set_elements<T>(a), set_elements<T>(b), op, opt, skipped, bailed);
    found = vals.size();
    if (bailed) return std::nullopt;
    return make_set(std::move(vals));
}

template <class T>
KfoldResult kfold_sum_impl(const ScalarSet& x, unsigned k, const SetOpOptions& opt) {
    const auto target = opt.early_exit_target;
    auto certified = [&](std::size_t found, unsigned fold) {
        KfoldResult r;
        r.certificate = LowerBoundCertificate{found, *target, fold};
        return r;
    };
    if (target && x.size() >= *target) return certified(x.size(), 1);
    if (target && *target > opt.size_cap)
        throw size_cap_error("size cap exceeded: early-exit target " + std::to_string(*target) +
                             " over cap " + std::to_string(opt.size_cap));
    ScalarSet cur = x;
    unsigned folds = 1;
    const int top = std::bit_width(k) - 1;
    for (int bit = top - 1; bit >= 0; --bit) {
        std::size_t found = 0;
        auto next = chain_step<T>(cur, cur, PairOp::add, opt, found);
        folds *= 2;
        if (!next) return certified(found, folds);
        cur = std::move(*next);
        if (target && cur.size() >= *target && folds < k) return certified(cur.size(), folds);
        if ((k >> bit) & 1u) {
            auto next2 = chain_step<T>(cur, x, PairOp::add, opt, found);
            folds += 1;
            if (!next2) return certified(found, folds);
            cur = std::move(*next2);
            if (target && cur.size() >= *target && folds < k) return certified(cur.size(), folds);
        }
    }
    KfoldResult r;
    r.set = std::move(cur);
    return r;
}

}  // namespace

KfoldResult kfold_sum(const ScalarSet& x, unsigned k, const SetOpOptions& opt) {
    if (k < 1) throw std::invalid_argument("fold count must be >= 1");
    if (x.empty()) throw std::invalid_argument("k-fold sum of empty set");
    if (x.kind() == SetKind::real) return kfold_sum_impl<BigRational>(x, k, opt);
    return kfold_sum_impl<GaussianRational>(x, k, opt);
}

ScalarSet kfold_product(const ScalarSet& x, unsigned k, const SetOpOptions& opt) {
    if (k < 1) throw std::invalid_argument("fold count must be >= 1");
    if (x.empty()) throw std::invalid_argument("k-fold product of empty set");
    SetOpOptions exact_opt = opt;
    exact_opt.early_exit_target.reset();
    ScalarSet cur = x;
    const int top = std::bit_width(k) - 1;
    for (int bit = top - 1; bit >= 0; --bit) {
        cur = pairwise(cur, cur, PairOp::mul, exact_opt).set;
        if ((k >> bit) & 1u) cur = pairwise(cur, x, PairOp::mul, exact_opt).set;
    }
    return cur;
}

template <class T>
const RatioProfileEntry<T>* RatioProfile<T>::find(const T& ratio) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), ratio,
                               [](const RatioProfileEntry<T>& e, const T& v) { return e.ratio < v; });
    if (it == entries.end() || !(it->ratio == ratio)) return nullptr;
    return &*it;
}

template <class T>
std::uint64_t RatioProfile<T>::total_mass() const {
    std::uint64_t m = 0;
    for (const auto& e : entries) m += e.count;
    return m;
}

template <class T>
RatioProfile<T> ratio_profile(const ScalarSet& x, const ScalarSet& y) {
    if (x.kind() != y.kind()) throw std::invalid_argument("kind mismatch in set operation");
    if (x.empty() || y.empty()) throw std::invalid_argument("set operation on empty set");
    const auto& xs = set_elements<T>(x);
    const auto& ys = set_elements<T>(y);
    RatioProfile<T> out;
    std::unordered_map<T, std::size_t> index;
    // sorted element order makes the first witness per ratio canonical
    for (const T& a : xs) {
        if (a.is_zero()) {
            out.skipped_zero_denominators += ys.size();
            continue;
        }
        for (const T& b : ys) {
            T r = b / a;
            auto [it, fresh] = index.try_emplace(std::move(r), out.entries.size());
            if (fresh)
                out.entries.push_back(RatioProfileEntry<T>{it->first, 1, a, b});
            else
                out.entries[it->second].count += 1;
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const RatioProfileEntry<T>& l, const RatioProfileEntry<T>& r) { return l.ratio < r.ratio; });
    return out;
}

template RatioProfile<BigRational> ratio_profile<BigRational>(const ScalarSet&, const ScalarSet&);
template RatioProfile<GaussianRational> ratio_profile<GaussianRational>(const ScalarSet&, const ScalarSet&);
template struct RatioProfile<BigRational>;
template struct RatioProfile<GaussianRational>;

}  // namespace sumprod
