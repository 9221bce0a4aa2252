#include "sumprod/complex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace sumprod {

namespace {

int octant(const BigRational& x, const BigRational& y, bool flipped = false) {
    if (y.signum() < 0 || (y.is_zero() && x.signum() < 0)) {
        if (flipped) throw verification_error("internal error: octant of zero");
        return 4 + octant(-x, -y, true);
    }
    if (y.is_zero()) return 0;  // positive real axis
    if (x.signum() > 0) return y < x ? 0 : 1;
    if (x.is_zero()) return 2;
    return -x < y ? 2 : 3;
}

int quadrant(const BigRational& x, const BigRational& y, bool flipped = false) {
    if (y.signum() < 0 || (y.is_zero() && x.signum() < 0)) {
        if (flipped) throw verification_error("internal error: quadrant of zero");
        return 2 + quadrant(-x, -y, true);
    }
    if (y.is_zero() || x.signum() > 0) return 0;
    return 1;
}

}  // namespace

int sector_index(const GaussianRational& z, int sector_count) {
    if (z.is_zero()) throw std::invalid_argument("sector of zero is undefined");
    if (sector_count == 8) return octant(z.re(), z.im());
    if (sector_count == 4) return quadrant(z.re(), z.im());
    throw std::invalid_argument("sector count must be 4 or 8 (rational-slope boundaries)");
}

std::optional<BigRational> sector_quotient_slope_bound(int sector_count) {
    if (sector_count == 8) return BigRational(1);
    if (sector_count == 4) return std::nullopt;
    throw std::invalid_argument("sector count must be 4 or 8 (rational-slope boundaries)");
}

SectorSelection sector_select(const ScalarSet& x, const std::vector<std::uint64_t>* weights,
                              int sector_count) {
    if (weights && weights->size() != x.size())
        throw std::invalid_argument("weights must align with the set's elements");
    sector_quotient_slope_bound(sector_count);  // validates the count
    const auto& xs = x.complexes();
    SectorSelection sel;
    sel.partition.sector_count = sector_count;
    sel.partition.per_sector_weights.assign(sector_count, 0);
    std::vector<int> sectors(xs.size(), -1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].is_zero()) {
            ++sel.zeros_removed;
            continue;
        }
        sectors[i] = sector_index(xs[i], sector_count);
        sel.partition.per_sector_weights[sectors[i]] += weights ? (*weights)[i] : 1;
    }
    if (sel.zeros_removed == xs.size()) throw std::invalid_argument("sector selection of {0}");
    int best = 0;
    for (int s = 1; s < sector_count; ++s)
        if (sel.partition.per_sector_weights[s] > sel.partition.per_sector_weights[best]) best = s;
    sel.partition.chosen_index = best;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (sectors[i] == best) sel.raw.push_back(xs[i]);
    if (sel.raw.empty()) throw verification_error("internal error: chosen sector is empty");
    // normalizer: smallest squared modulus, ties by canonical order (raw is
    // already sorted since xs is)
    std::size_t pick = 0;
    for (std::size_t i = 1; i < sel.raw.size(); ++i)
        if (sel.raw[i].norm_sq() < sel.raw[pick].norm_sq()) pick = i;
    sel.partition.normalizer = sel.raw[pick];
    sel.normalized.reserve(sel.raw.size());
    for (const auto& v : sel.raw) sel.normalized.push_back(v / sel.partition.normalizer);
    return sel;
}

double MstEdges::total_weight() const {
    double t = 0;
    for (const auto& w : squared_weights) t += std::sqrt(w.to_double());
    return t;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int root(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    bool unite(int a, int b) {
        int ra = root(a), rb = root(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

}  // namespace

MstEdges euclidean_mst(std::vector<GaussianRational> points) {
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i] == points[i + 1]) throw std::invalid_argument("ratio points must be distinct");
    if (points.size() < 2) throw std::invalid_argument("spanning tree needs at least 2 points");
    const int n = static_cast<int>(points.size());
    struct Cand {
        BigRational w;
        int i, j;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cands.push_back({(points[i] - points[j]).norm_sq(), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) {
        auto c = l.w <=> r.w;
        if (c != 0) return c < 0;
        if (l.i != r.i) return l.i < r.i;
        return l.j < r.j;
    });
    UnionFind uf(n);
    std::vector<std::pair<int, int>> picked;
    std::vector<BigRational> weights;
    for (const auto& c : cands) {
        if (uf.unite(c.i, c.j)) {
            picked.emplace_back(c.i, c.j);
            weights.push_back(c.w);
            if (static_cast<int>(picked.size()) == n - 1) break;
        }
    }
    if (static_cast<int>(picked.size()) != n - 1)
        throw verification_error("internal error: spanning tree incomplete");
    // canonical edge order
    std::vector<std::size_t> order(picked.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return picked[l] < picked[r]; });
    MstEdges out;
    out.vertices = std::move(points);
    for (std::size_t k : order) {
        out.edges.push_back(picked[k]);
        out.squared_weights.push_back(weights[k]);
    }
    return out;
}

MobiusRegion::MobiusRegion(GaussianRational a_, GaussianRational b_, WedgeSpec w)
    : a(std::move(a_)), b(std::move(b_)), wedge(std::move(w)) {
    if (a == b) throw std::invalid_argument("region endpoints must differ");
}

bool region_member(const GaussianRational& w, const MobiusRegion& region) {
    GaussianRational m = (w - region.a) / (region.b - region.a);
    GaussianRational one(1);
    if (m == one) return false;  // b's chart image of infinity
    GaussianRational u = m / (one - m);
    return wedge_member(u, region.wedge);
}

namespace {

// all ordered pairs (a, b) in s^2 with b / a = ratio, canonical order in a
std::vector<std::pair<GaussianRational, GaussianRational>> representations(
    const std::vector<GaussianRational>& s, const ScalarSet& as_set, const GaussianRational& ratio) {
    std::vector<std::pair<GaussianRational, GaussianRational>> out;
    for (const auto& a : s) {
        GaussianRational b = ratio * a;
        if (as_set.contains(b)) out.emplace_back(a, b);
    }
    return out;
}

struct GaussPairHash {
    std::size_t operator()(const std::pair<GaussianRational, GaussianRational>& p) const noexcept {
        std::size_t h = p.first.hash();
        h ^= p.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

Thm6Result thm6_witnesses(const ScalarSet& a_in, const WedgeSpec& wedge, int sector_count) {
    if (a_in.empty()) throw std::invalid_argument("Theorem 6 needs a nonempty set");
    const ScalarSet a = a_in.kind() == SetKind::real ? a_in.lifted_to_complex() : a_in;
    (void)wedge;  // regions with the configured wedge are render/probe concerns;
                  // the exact pipeline checks the sector-derived wedge below

    Thm6Result res;
    res.selection = sector_select(a, nullptr, sector_count);
    ScalarSet prime = ScalarSet::of_complexes(res.selection.raw);
    auto profile = ratio_profile<GaussianRational>(prime, prime);
    res.spanned_mass = profile.total_mass();

    std::vector<GaussianRational> ratio_points;
    ratio_points.reserve(profile.entries.size());
    for (const auto& e : profile.entries) ratio_points.push_back(e.ratio);

    std::unordered_map<GaussianRational, std::size_t> first_edge_of;
    auto sector_bound = sector_quotient_slope_bound(sector_count);

    if (ratio_points.size() == 1) {
        // single ratio point: the doubling of any representative realizes it
        const auto& e = profile.entries.front();
        GaussianRational z = (e.rep_b + e.rep_b) / (e.rep_a + e.rep_a);
        res.witnesses.push_back(ComplexWitness{z, "diag(1)"});
        res.per_edge_total = 1;
    } else {
        res.mst = euclidean_mst(ratio_points);
        for (std::size_t ei = 0; ei < res.mst.edges.size(); ++ei) {
            auto [vi, vj] = res.mst.edges[ei];
            const auto* el = profile.find(res.mst.vertices[vi]);
            const auto* em = profile.find(res.mst.vertices[vj]);
            if (!el || !em) throw verification_error("internal error: MST vertex missing from profile");
            // vary the side with the larger representation count (ties: the
            // lexicographically smaller ratio point), fix the other side's
            // canonical representative
            const RatioProfileEntry<GaussianRational>* vary = nullptr;
            const RatioProfileEntry<GaussianRational>* fixed = nullptr;
            if (el->count > em->count || (el->count == em->count && el->ratio < em->ratio)) {
                vary = el;
                fixed = em;
            } else {
                vary = em;
                fixed = el;
            }
            auto reps = representations(res.selection.raw, prime, vary->ratio);
            if (reps.size() != vary->count)
                throw verification_error("internal error: representation fiber does not match profile count");
            std::unordered_set<GaussianRational> edge_seen;
            std::optional<MobiusRegion> sector_region;
            if (sector_bound)
                sector_region.emplace(fixed->ratio, vary->ratio, WedgeSpec(*sector_bound));
            for (std::size_t t = 0; t < reps.size(); ++t) {
                const auto& [q1, q2] = reps[t];
                GaussianRational den = fixed->rep_a + q1;
                if (den.is_zero())
                    throw verification_error("internal error: zero denominator inside one sector");
                GaussianRational z = (fixed->rep_b + q2) / den;
                if (!edge_seen.insert(z).second)
                    throw verification_error("internal error: within-edge witness collision at " +
                                           z.to_string());
                if (sector_region && !region_member(z, *sector_region))
                    throw verification_error("internal error: witness escaped its Mobius region: " +
                                           z.to_string());
                auto [it, fresh] = first_edge_of.try_emplace(z, ei);
                if (!fresh)
                    res.disjointness_violations.push_back(
                        "disjointness violation: witness " + z.to_string() + " on edges " +
                        std::to_string(it->second) + " and " + std::to_string(ei));
                res.witnesses.push_back(ComplexWitness{
                    z, "edge(" + std::to_string(vi) + "," + std::to_string(vj) + ")[" +
                           std::to_string(t) + "]"});
            }
            res.per_edge_total += vary->count;
        }
    }

    std::unordered_set<GaussianRational> distinct;
    for (const auto& w : res.witnesses) distinct.insert(w.ratio);
    res.distinct_count = distinct.size();

    ScalarSet sum = pairwise(a, a, PairOp::add).set;
    ScalarSet ratios = pairwise(sum, sum, PairOp::div).set;
    res.ratio_set_size = ratios.size();
    for (const auto& w : res.witnesses)
        if (!ratios.contains(w.ratio))
            throw verification_error("internal error: witness " + w.ratio.to_string() +
                                   " is outside (A+A)/(A+A)");

    res.target_bound = (res.spanned_mass + 1) / 2;
    res.c1 = BigRational(BigInt(static_cast<long long>(res.distinct_count)),
                         BigInt(static_cast<long long>(a_in.size() * a_in.size())));
    res.pass = res.disjointness_violations.empty() && res.distinct_count >= res.target_bound &&
               res.ratio_set_size >= res.distinct_count;
    return res;
}

Lemma7Result lemma7_construct(const ScalarSet& a_in, const ScalarSet& b_in, const ScalarSet& c_in,
                              const WedgeSpec& wedge, int sector_count) {
    (void)wedge;
    if (a_in.empty() || b_in.empty() || c_in.empty())
        throw std::invalid_argument("Lemma 7 needs three nonempty sets");
    Lemma7Result res;
    ScalarSet a = (a_in.kind() == SetKind::real ? a_in.lifted_to_complex() : a_in)
                      .without_zero(&res.zeros_removed_a);
    ScalarSet b = (b_in.kind() == SetKind::real ? b_in.lifted_to_complex() : b_in)
                      .without_zero(&res.zeros_removed_b);
    ScalarSet c = c_in.kind() == SetKind::real ? c_in.lifted_to_complex() : c_in;
    if (a.empty() || b.empty()) throw std::invalid_argument("Lemma 7 sets must not reduce to {0}");

    // representative set P for B/A: one canonical pair (a_i, b_i) per ratio
    auto profile = ratio_profile<GaussianRational>(a, b);
    res.ratio_set_size = profile.entries.size();

    // w(a) = number of representatives whose first coordinate is a
    std::vector<std::uint64_t> weight(a.size(), 0);
    const auto& a_elems = a.complexes();
    auto index_of = [&](const GaussianRational& v) {
        auto it = std::lower_bound(a_elems.begin(), a_elems.end(), v);
        return static_cast<std::size_t>(it - a_elems.begin());
    };
    for (const auto& e : profile.entries) weight[index_of(e.rep_a)] += 1;

    auto a_sel = sector_select(a, &weight, sector_count);
    ScalarSet a_prime = ScalarSet::of_complexes(a_sel.raw);
    std::vector<const RatioProfileEntry<GaussianRational>*> p_prime;
    for (const auto& e : profile.entries)
        if (a_prime.contains(e.rep_a)) p_prime.push_back(&e);
    res.restricted_rep_count = p_prime.size();
    if (p_prime.size() != a_sel.partition.per_sector_weights[a_sel.partition.chosen_index])
        throw verification_error("internal error: |P'| disagrees with the chosen sector weight");
    if (p_prime.size() * static_cast<std::size_t>(sector_count) < profile.entries.size())
        throw verification_error("internal error: pigeonhole bound |P'| >= |P|/sectors failed");

    auto c_sel = sector_select(c, nullptr, sector_count);
    res.c_restricted = c_sel.raw.size();

    using GPair = std::pair<GaussianRational, GaussianRational>;
    std::unordered_map<GPair, std::size_t, GaussPairHash> global;  // element -> owning edge

    if (p_prime.size() >= 2) {
        std::vector<GaussianRational> pts;
        pts.reserve(p_prime.size());
        for (const auto* e : p_prime) pts.push_back(e->ratio);
        res.mst = euclidean_mst(pts);
        res.edge_count = res.mst.edges.size();
        std::unordered_map<GaussianRational, const RatioProfileEntry<GaussianRational>*> by_ratio;
        for (const auto* e : p_prime) by_ratio[e->ratio] = e;
        for (std::size_t ei = 0; ei < res.mst.edges.size(); ++ei) {
            auto [vi, vj] = res.mst.edges[ei];
            const auto* pi = by_ratio.at(res.mst.vertices[vi]);
            const auto* pj = by_ratio.at(res.mst.vertices[vj]);
            std::unordered_set<GPair, GaussPairHash> s_ij;
            for (const auto& c1 : c_sel.raw) {
                for (const auto& c2 : c_sel.raw) {
                    GPair el{pi->rep_a * c1 + pj->rep_a * c2, pi->rep_b * c1 + pj->rep_b * c2};
                    if (el.first.is_zero())
                        throw verification_error(
                            "internal error: zero first coordinate inside one sector pair");
                    s_ij.insert(el);
                }
            }
            if (s_ij.size() != c_sel.raw.size() * c_sel.raw.size())
                throw verification_error(
                    "Claim |S_ij| = |C'|^2 violated on edge (" + pi->ratio.to_string() + ", " +
                    pj->ratio.to_string() + "): " + std::to_string(s_ij.size()) + " vs " +
                    std::to_string(c_sel.raw.size() * c_sel.raw.size()));
            for (const auto& el : s_ij) {
                auto [it, fresh] = global.try_emplace(el, ei);
                if (!fresh)
                    throw verification_error("Claim S_ij disjointness violated: (" +
                                           el.first.to_string() + ", " + el.second.to_string() +
                                           ") lies in edges " + std::to_string(it->second) +
                                           " and " + std::to_string(ei));
            }
        }
    }
    res.claim9_ok = true;
    res.claim10_ok = true;

    ScalarSet ac = pairwise(a, c, PairOp::mul).set;
    ScalarSet bc = pairwise(b, c, PairOp::mul).set;
    ScalarSet acac = pairwise(ac, ac, PairOp::add).set;
    ScalarSet bcbc = pairwise(bc, bc, PairOp::add).set;
    for (const auto& [el, edge] : global) {
        (void)edge;
        if (!acac.contains(el.first) || !bcbc.contains(el.second))
            throw verification_error("internal error: S_ij escaped (AC+AC) x (BC+BC)");
    }

    res.lhs = BigInt(static_cast<long long>(acac.size())) * BigInt(static_cast<long long>(bcbc.size()));
    long long edges = p_prime.empty() ? 0 : static_cast<long long>(p_prime.size()) - 1;
    res.rhs = BigInt(edges) * BigInt(static_cast<long long>(res.c_restricted)) *
              BigInt(static_cast<long long>(res.c_restricted));
    res.conclusion_ok = res.lhs >= res.rhs;
    BigInt paper_rhs = BigInt(static_cast<long long>(res.ratio_set_size)) *
                       BigInt(static_cast<long long>(c_in.size())) *
                       BigInt(static_cast<long long>(c_in.size()));
    res.ratio_to_paper_rhs = BigRational(res.lhs, paper_rhs);
    return res;
}

ProbeReport region_disjointness_probe(const MstEdges& mst, const WedgeSpec& wedge, int resolution) {
    if (resolution < 2) throw std::invalid_argument("probe resolution must be >= 2");
    ProbeReport rep;
    rep.resolution = resolution;
    rep.wedge_slope = wedge.slope_bound.to_double();
    const double s = rep.wedge_slope;
    using Cx = std::complex<double>;
    std::vector<Cx> va, vb;
    for (const auto& [i, j] : mst.edges) {
        va.push_back({mst.vertices[i].re().to_double(), mst.vertices[i].im().to_double()});
        vb.push_back({mst.vertices[j].re().to_double(), mst.vertices[j].im().to_double()});
    }
    auto member = [&](std::size_t e, Cx z) {
        Cx span = vb[e] - va[e];
        if (std::abs(span) == 0.0) return false;
        Cx m = (z - va[e]) / span;
        Cx d = Cx(1.0, 0.0) - m;
        if (std::abs(d) == 0.0) return false;
        Cx u = m / d;
        return u.real() > 0 && std::abs(u.imag()) < s * u.real();
    };
    constexpr double kLogRange = 9.0;  // t spans e^-9 .. e^9 along each boundary ray
    for (std::size_t e = 0; e < mst.edges.size(); ++e) {
        for (int side = 0; side < 2; ++side) {
            const double sign = side == 0 ? 1.0 : -1.0;
            for (int k = 0; k < resolution; ++k) {
                const double t =
                    std::exp(-kLogRange + 2 * kLogRange * static_cast<double>(k) / (resolution - 1));
                Cx u(t, sign * s * t);
                Cx m = u / (Cx(1.0, 0.0) + u);
                Cx z = va[e] + (vb[e] - va[e]) * m;
                ++rep.samples_tested;
                for (std::size_t f = 0; f < mst.edges.size(); ++f) {
                    if (f == e) continue;
                    if (member(f, z) && rep.overlaps.size() < 100)
                        rep.overlaps.push_back(RegionOverlap{static_cast<int>(e),
                                                             static_cast<int>(f), z.real(),
                                                             z.imag()});
                }
            }
        }
    }
    return rep;
}

}  // namespace sumprod
