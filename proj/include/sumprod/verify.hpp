#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumprod/complex_geometry.hpp"
#include "sumprod/report.hpp"
#include "sumprod/scalar_set.hpp"
#include "sumprod/slope_geometry.hpp"

namespace sumprod {

// 64-bit LCG (multiplier 6364136223846793005, increment 1442695040888963407),
// outputs the high 32 bits. The whole trial machinery is reproducible from it.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next32() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>(state_ >> 32);
    }
    // 1 + next32() % bound
    std::uint64_t draw(std::uint64_t bound) { return 1 + next32() % bound; }
    // negative iff the drawn word is odd
    int draw_sign() { return (next32() & 1u) ? -1 : 1; }

private:
    std::uint64_t state_;
};

enum class DomainKind { positive_integers, positive_rationals, gaussian_rationals };

struct Domain {
    DomainKind kind = DomainKind::positive_integers;
    std::uint64_t bound = 100;  // M: values (or numerators/denominators) in [1, M]
};

struct TrialSpec {
    std::uint64_t seed = 1;
    unsigned set_size = 4;
    unsigned trials = 1;
    Domain domain;
};

// Deterministic random set: same TrialSpec, same set. Draw order per element:
// integers: value; rationals: num, den; gaussian: re num, re den, re sign,
// im num, im den, im sign. Duplicates are rejection-sampled.
ScalarSet random_set(const TrialSpec& spec);

// Seed for trial i of a multi-trial run (documented: seed + i).
inline std::uint64_t trial_seed(const TrialSpec& spec, unsigned trial_index) {
    return spec.seed + trial_index;
}

Domain parse_domain(const std::string& text);  // "ints:M" | "rats:M" | "gauss:M"
std::string domain_to_string(const Domain& d);

// --- theorem-by-theorem verifiers (measured values recomputed through
// --- set algebra only; witness pipelines cross-checked against them) ---

VerificationReport verify_thm1(const ScalarSet& a);
VerificationReport verify_thm2(const std::vector<GridPoint>& points);
VerificationReport verify_lemma3(const ScalarSet& a, const ScalarSet& b, const ScalarSet& c,
                                 const ScalarSet& d);
VerificationReport verify_thm4(const ScalarSet& a, unsigned k, const SetOpOptions& opt = {});
VerificationReport verify_corollary5(const ScalarSet& a, const SetOpOptions& opt = {});

// Exact count of solutions to (a1+a2)(a3+a4) = (a5+a6)(a7+a8) over A^8,
// computed as the sum of squared multiplicities of the product multiset.
BigInt energy_count(const ScalarSet& a);
VerificationReport verify_energy(const ScalarSet& a);

// Exact coprime-pair count over [1, 2n]^2 (totient sieve) against 6/pi^2,
// plus the exact ratio set |(S)/(S)| for S = {1..n}+{1..n} with the
// [2n^2-1, 2.5n^2) range check for n >= 50.
VerificationReport coprime_density(unsigned n);

VerificationReport ungar_check(const ScalarSet& a);

VerificationReport verify_thm6(const ScalarSet& a, const WedgeSpec& wedge, int sector_count = 8);
VerificationReport verify_lemma7(const ScalarSet& a, const ScalarSet& b, const ScalarSet& c,
                                 const WedgeSpec& wedge, int sector_count = 8);
VerificationReport verify_thm9(const ScalarSet& a, unsigned k, const SetOpOptions& opt = {});

enum class ScanKind { k_fold_product_sum, triple_product };

// Exploration only: exact |kA^(k)|/|A|^k or |(A+A)(A+A)(A+A)|/|A|^3 per
// trial, with minima and minimizing sets; asserts nothing.
nlohmann::json conjecture_scan(ScanKind kind, const TrialSpec& spec, unsigned k,
                               const SetOpOptions& opt = {});

}  // namespace sumprod
