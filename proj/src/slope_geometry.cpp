#include "sumprod/slope_geometry.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace sumprod {

std::vector<GridPoint> build_grid(const ScalarSet& a) {
    const auto& xs = a.reals();
    if (xs.empty()) throw std::invalid_argument("Theorem 1 requires a nonempty set");
    for (const auto& v : xs)
        if (v.signum() <= 0) throw std::invalid_argument("Theorem 1 requires positive reals");
    std::vector<GridPoint> grid;
    grid.reserve(xs.size() * xs.size());
    for (const auto& x : xs)
        for (const auto& y : xs) grid.push_back(GridPoint{x, y});
    return grid;
}

SlopeCover slope_cover(std::span<const GridPoint> points) {
    std::vector<GridPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) throw std::invalid_argument("slope cover of empty point set");
    std::map<BigRational, std::vector<GridPoint>> by_slope;
    for (const auto& p : pts) {
        if (p.x.signum() <= 0 || p.y.signum() <= 0)
            throw std::invalid_argument("slope cover requires the open positive quadrant, got " + p.to_string());
        by_slope[p.slope_from_origin()].push_back(p);
    }
    SlopeCover cover;
    cover.source_point_count = pts.size();
    for (auto& [slope, line_pts] : by_slope) {
        std::sort(line_pts.begin(), line_pts.end(),
                  [](const GridPoint& l, const GridPoint& r) { return l.sq_norm() < r.sq_norm(); });
        cover.lines.push_back(SlopeLine{slope, std::move(line_pts)});
    }
    return cover;
}

namespace {

// Chain between consecutive lines i and i+1 (1-based labels in provenance):
// p_i^(1)+q^(n), ..., p_i^(1)+q^(1), p_i^(2)+q^(1), ..., p_i^(n_i)+q^(1).
// Checks the strict monotonicity and betweenness facts the construction
// relies on; a violation is an implementation bug, never an input property.
void emit_chain(const SlopeLine& low, const SlopeLine& high, std::size_t line_index,
                std::vector<RealWitness>& out) {
    const auto& lo = low.points;
    const auto& hi = high.points;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (idx on low, idx on high)
    for (std::size_t j = hi.size(); j-- > 0;) order.emplace_back(0, j);
    for (std::size_t j = 1; j < lo.size(); ++j) order.emplace_back(j, 0);
    const BigRational* prev = nullptr;
    for (auto [li, hj] : order) {
        GridPoint s = lo[li] + hi[hj];
        BigRational r = s.slope_from_origin();
        if (!(low.slope < r && r < high.slope))
            throw verification_error("internal error: chain ratio left the open slope interval");
        if (prev && !(r < *prev))
            throw verification_error("internal error: chain ratios are not strictly decreasing");
        out.push_back(RealWitness{r,
                                  "chain(" + std::to_string(line_index) + "," + std::to_string(li + 1) +
                                      "," + std::to_string(hj + 1) + ")",
                                  s});
        prev = &out.back().ratio;
    }
}

std::vector<RealWitness> cover_witnesses(const SlopeCover& cover) {
    std::vector<RealWitness> out;
    for (std::size_t i = 0; i + 1 < cover.lines.size(); ++i)
        emit_chain(cover.lines[i], cover.lines[i + 1], i + 1, out);
    for (std::size_t i = 0; i < cover.lines.size(); ++i) {
        const GridPoint& p = cover.lines[i].points.front();
        GridPoint d = p + p;
        if (!(d.slope_from_origin() == cover.lines[i].slope))
            throw verification_error("internal error: diagonal doubling left its line");
        out.push_back(RealWitness{cover.lines[i].slope, "diag(" + std::to_string(i + 1) + ")", d});
    }
    return out;
}

std::size_t assert_distinct(const std::vector<RealWitness>& ws) {
    std::unordered_set<BigRational> seen;
    for (const auto& w : ws)
        if (!seen.insert(w.ratio).second)
            throw verification_error("internal error: duplicate witness ratio " + w.ratio.to_string());
    return seen.size();
}

}  // namespace

RealWitnessReport thm1_witnesses(const ScalarSet& a) {
    auto grid = build_grid(a);
    auto cover = slope_cover(grid);
    RealWitnessReport rep;
    rep.witnesses = cover_witnesses(cover);
    rep.distinct_count = assert_distinct(rep.witnesses);
    rep.target_bound = 2 * a.size() * a.size() - 1;
    rep.pass = rep.distinct_count >= rep.target_bound;

    // every emitted ratio must lie in the exact set (A+A)/(A+A)
    ScalarSet sum = pairwise(a, a, PairOp::add).set;
    ScalarSet ratios = pairwise(sum, sum, PairOp::div).set;
    for (const auto& w : rep.witnesses)
        if (!ratios.contains(w.ratio))
            throw verification_error("internal error: witness " + w.ratio.to_string() +
                                   " is outside (A+A)/(A+A)");
    return rep;
}

RealWitnessReport thm2_witnesses(std::span<const GridPoint> points) {
    auto cover = slope_cover(points);
    if (cover.lines.size() < 2) throw std::invalid_argument("degenerate: single slope");
    RealWitnessReport rep;
    rep.witnesses = cover_witnesses(cover);
    rep.distinct_count = assert_distinct(rep.witnesses);
    rep.target_bound = cover.source_point_count + 1;
    rep.pass = rep.distinct_count >= rep.target_bound;
    return rep;
}

std::size_t direction_count(std::span<const GridPoint> points) {
    std::vector<GridPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) throw std::invalid_argument("direction count needs at least two points");
    std::unordered_set<BigRational> slopes;
    bool vertical = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            BigRational dx = pts[j].x - pts[i].x;
            if (dx.is_zero())
                vertical = true;
            else
                slopes.insert((pts[j].y - pts[i].y) / dx);
        }
    }
    return slopes.size() + (vertical ? 1 : 0);
}

}  // namespace sumprod
