#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unordered_set>

#include "doctest.h"
#include "sumprod/slope_geometry.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

namespace {

ScalarSet ints(std::vector<long long> v) {
    std::vector<BigRational> r;
    for (auto x : v) r.emplace_back(x);
    return ScalarSet::of_reals(std::move(r));
}

BigRational q(long long n, long long d) { return BigRational(BigInt(n), BigInt(d)); }

GridPoint pt(long long x, long long y) { return GridPoint{BigRational(x), BigRational(y)}; }

// oracle: the ratio set with multiplicity, counted directly
std::vector<std::size_t> line_counts_oracle(const ScalarSet& a) {
    auto prof = ratio_profile<BigRational>(a, a);
    std::vector<std::size_t> counts;
    for (const auto& e : prof.entries) counts.push_back(e.count);
    return counts;
}

std::unordered_set<BigRational> brute_ratio_set(const ScalarSet& a) {
    ScalarSet sum = pairwise(a, a, PairOp::add).set;
    std::unordered_set<BigRational> out;
    for (const auto& x : sum.reals())
        for (const auto& y : sum.reals()) out.insert(x / y);
    return out;
}

}  // namespace

TEST_CASE("build_grid") {
    CHECK(build_grid(ints({1})).size() == 1);
    CHECK(build_grid(ints({1, 2})).size() == 4);
    CHECK(build_grid(ints({1, 2, 3})).size() == 9);
    CHECK_THROWS_AS(build_grid(ints({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(ints({-1, 1})), std::invalid_argument);
}

TEST_CASE("slope cover of small grids") {
    auto c12 = slope_cover(build_grid(ints({1, 2})));
    REQUIRE(c12.lines.size() == 3);
    CHECK(c12.lines[0].slope == q(1, 2));
    CHECK(c12.lines[1].slope == q(1, 1));
    CHECK(c12.lines[2].slope == q(2, 1));
    CHECK(c12.lines[0].points.size() == 1);
    CHECK(c12.lines[1].points.size() == 2);
    CHECK(c12.lines[2].points.size() == 1);

    auto single = slope_cover(std::vector<GridPoint>{pt(1, 1)});
    REQUIRE(single.lines.size() == 1);
    CHECK(single.lines[0].slope == q(1, 1));

    // line counts equal the ratio-set multiplicities (oracle)
    for (auto v : {std::vector<long long>{1, 2, 3}, {1, 2, 4}, {2, 3, 5, 7}}) {
        ScalarSet a = ints(v);
        auto cover = slope_cover(build_grid(a));
        auto oracle = line_counts_oracle(a);
        REQUIRE(cover.lines.size() == oracle.size());
        std::size_t total = 0;
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            CHECK(cover.lines[i].points.size() == oracle[i]);
            total += cover.lines[i].points.size();
        }
        CHECK(total == cover.source_point_count);
        for (std::size_t i = 0; i + 1 < cover.lines.size(); ++i)
            CHECK(cover.lines[i].slope < cover.lines[i + 1].slope);
    }

    // {1,2,3}: 7 lines (1,1,1,3,1,1,1); {1,2,4}: 5 lines (1,2,3,2,1)
    CHECK(slope_cover(build_grid(ints({1, 2, 3}))).lines.size() == 7);
    auto c124 = slope_cover(build_grid(ints({1, 2, 4})));
    REQUIRE(c124.lines.size() == 5);
    CHECK(c124.lines[2].points.size() == 3);

    // extreme lines hold a single point each: (a_max, a_min) and (a_min, a_max)
    auto c123 = slope_cover(build_grid(ints({1, 2, 3})));
    REQUIRE(c123.lines.front().points.size() == 1);
    REQUIRE(c123.lines.back().points.size() == 1);
    CHECK(c123.lines.front().points[0] == pt(3, 1));
    CHECK(c123.lines.back().points[0] == pt(1, 3));

    CHECK_THROWS_AS(slope_cover(std::vector<GridPoint>{pt(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(slope_cover(std::vector<GridPoint>{pt(1, 0)}), std::invalid_argument);
}

TEST_CASE("thm1 witnesses: tight count, membership, interval structure") {
    auto r123 = thm1_witnesses(ints({1, 2, 3}));
    CHECK(r123.distinct_count == 17);
    CHECK(r123.target_bound == 17);
    CHECK(r123.pass);

    auto r1 = thm1_witnesses(ints({1}));
    CHECK(r1.distinct_count == 1);
    CHECK(r1.target_bound == 1);
    CHECK(r1.pass);

    // A = {1,2}: the witness set IS the full ratio set of {2,3,4}
    auto r12 = thm1_witnesses(ints({1, 2}));
    CHECK(r12.distinct_count == 7);
    std::unordered_set<BigRational> got;
    for (const auto& w : r12.witnesses) got.insert(w.ratio);
    auto brute = pairwise(ints({2, 3, 4}), ints({2, 3, 4}), PairOp::div).set;
    CHECK(got.size() == brute.size());
    for (const auto& v : brute.reals()) CHECK(got.count(v) == 1);
}

TEST_CASE("thm1 property: random sets realize 2n^2-1 exactly inside the brute ratio set") {
    Lcg rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        TrialSpec spec;
        spec.seed = 9000 + trial;
        spec.set_size = 1 + rng.next32() % 6;
        spec.domain = Domain{DomainKind::positive_rationals, 12};
        ScalarSet a = random_set(spec);
        auto rep = thm1_witnesses(a);
        CHECK(rep.distinct_count == 2 * a.size() * a.size() - 1);
        CHECK(rep.pass);
        auto brute = brute_ratio_set(a);
        CHECK(brute.size() >= rep.distinct_count);
        for (const auto& w : rep.witnesses) CHECK(brute.count(w.ratio) == 1);
    }
}

TEST_CASE("thm2 witnesses and brute slopes") {
    // P = {(1,1),(2,2),(3,3),(1,2)}: |R(P+P)| = 5 exactly (16 sums enumerated)
    std::vector<GridPoint> p1{pt(1, 1), pt(2, 2), pt(3, 3), pt(1, 2)};
    std::unordered_set<BigRational> slopes;
    for (const auto& a : p1)
        for (const auto& b : p1) slopes.insert((a + b).slope_from_origin());
    CHECK(slopes.size() == 5);
    auto rep1 = verify_thm2(p1);
    CHECK(rep1.measured == "5");
    CHECK(rep1.bound == "5");
    CHECK(rep1.pass);

    // P = {(1,1),(1,2)}: R(P+P) = {1, 3/2, 2}
    std::vector<GridPoint> p2{pt(1, 1), pt(1, 2)};
    auto rep2 = verify_thm2(p2);
    CHECK(rep2.measured == "3");
    CHECK(rep2.bound == "3");
    CHECK(rep2.pass);
    auto wit2 = thm2_witnesses(p2);
    std::unordered_set<BigRational> w2;
    for (const auto& w : wit2.witnesses) w2.insert(w.ratio);
    CHECK(w2 == std::unordered_set<BigRational>{q(1, 1), q(3, 2), q(2, 1)});

    // collinear-plus-one achieves the bound with equality
    std::vector<GridPoint> collinear;
    for (long long i = 1; i <= 7; ++i) collinear.push_back(pt(i, 2 * i));
    collinear.push_back(pt(1, 1));
    auto rep3 = verify_thm2(collinear);
    CHECK(rep3.measured == std::to_string(collinear.size() + 1));
    CHECK(rep3.pass);

    CHECK_THROWS_WITH_AS(thm2_witnesses(std::vector<GridPoint>{pt(1, 1), pt(2, 2)}),
                         "degenerate: single slope", std::invalid_argument);
}

TEST_CASE("direction count") {
    std::vector<GridPoint> grid;
    for (long long x : {0, 1, 2})
        for (long long y : {0, 1, 2}) grid.push_back(pt(x, y));
    CHECK(direction_count(grid) == 8);  // = |A|^2 - 1, vertical included
    CHECK(direction_count(std::vector<GridPoint>{pt(0, 0), pt(3, 5)}) == 1);
    CHECK(direction_count(std::vector<GridPoint>{pt(0, 0), pt(1, 1), pt(2, 2)}) == 1);
    CHECK_THROWS_AS(direction_count(std::vector<GridPoint>{pt(1, 1)}), std::invalid_argument);
}
