#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumprod/scalar_set.hpp"

namespace sumprod {

// Half-open equiangular sectors of C \ {0} bounded by rational-slope rays.
// Only quadrants (4) and octants (8) admit exact rational boundaries.
int sector_index(const GaussianRational& z, int sector_count);

// tan bound on |arg(z1/z2)| for z1, z2 in one sector; octants give 1,
// quadrants give no finite bound.
std::optional<BigRational> sector_quotient_slope_bound(int sector_count);

struct SectorPartition {
    int sector_count = 8;
    std::vector<std::uint64_t> per_sector_weights;
    int chosen_index = 0;
    GaussianRational normalizer;
};

struct SectorSelection {
    SectorPartition partition;
    std::vector<GaussianRational> raw;         // chosen-sector elements, canonical order
    std::vector<GaussianRational> normalized;  // raw / normalizer
    std::uint64_t zeros_removed = 0;
};

// Pigeonhole step: drop 0, weigh each sector (unit weights unless given,
// weights aligned with the set's canonical element order), keep the heaviest
// sector (lowest index on ties) and divide by its smallest-|.|^2 element.
SectorSelection sector_select(const ScalarSet& x, const std::vector<std::uint64_t>* weights,
                              int sector_count);

struct MstEdges {
    std::vector<GaussianRational> vertices;     // canonical order
    std::vector<std::pair<int, int>> edges;     // i < j, sorted lexicographically
    std::vector<BigRational> squared_weights;   // parallel to edges
    double total_weight() const;                // sum of Euclidean lengths (float)
};

// Minimum spanning tree under Euclidean distance; Kruskal over exact squared
// distances with (weight, i, j) tie-breaking. Throws on duplicate points.
MstEdges euclidean_mst(std::vector<GaussianRational> points);

// Affine image, anchored at a and b, of the wedge under z -> z/(1+z);
// contains the open segment (a, b).
struct MobiusRegion {
    GaussianRational a;
    GaussianRational b;
    WedgeSpec wedge;
    MobiusRegion(GaussianRational a_, GaussianRational b_, WedgeSpec w);
};

bool region_member(const GaussianRational& w, const MobiusRegion& region);

struct ComplexWitness {
    GaussianRational ratio;
    std::string provenance;
};

struct Thm6Result {
    std::vector<ComplexWitness> witnesses;  // per-edge emission order
    std::size_t distinct_count = 0;
    std::uint64_t per_edge_total = 0;
    std::uint64_t spanned_mass = 0;  // sum of representation counts over MST vertices
    std::size_t target_bound = 0;    // ceil(spanned_mass / 2)
    bool pass = false;
    std::vector<std::string> disjointness_violations;  // cross-edge collisions (diagnostic)
    std::size_t ratio_set_size = 0;                    // |(A+A)/(A+A)|, brute force
    BigRational c1;                                    // distinct_count / |A|^2
    MstEdges mst;
    SectorSelection selection;
};

// Sector-pigeonhole A, profile the ratio set, span it by a Euclidean MST and
// emit max(r(l), r(m)) exact witnesses per edge; distinctness within an edge
// is asserted, cross-edge collisions are surfaced as diagnostics.
Thm6Result thm6_witnesses(const ScalarSet& a, const WedgeSpec& wedge, int sector_count = 8);

struct Lemma7Result {
    std::size_t ratio_set_size = 0;        // |B/A| after zero deletion
    std::size_t restricted_rep_count = 0;  // |P'|
    std::size_t c_restricted = 0;          // |C'|
    std::size_t edge_count = 0;
    bool claim9_ok = false;
    bool claim10_ok = false;
    BigInt lhs;  // |AC+AC| * |BC+BC|
    BigInt rhs;  // (|P'| - 1) * |C'|^2
    bool conclusion_ok = false;
    BigRational ratio_to_paper_rhs;  // lhs / (|B/A| * |C|^2)
    std::uint64_t zeros_removed_a = 0, zeros_removed_b = 0;
    MstEdges mst;
};

// The representative-set construction: reps of B/A, weighted sector
// restriction P', sector restriction C', MST over the restricted ratio
// points, and the per-edge sum sets S_ij whose exact cardinality and
// pairwise disjointness are verified elementwise.
Lemma7Result lemma7_construct(const ScalarSet& a, const ScalarSet& b, const ScalarSet& c,
                              const WedgeSpec& wedge, int sector_count = 8);

struct RegionOverlap {
    int edge_a;
    int edge_b;
    double x;
    double y;
};

struct ProbeReport {
    int resolution = 0;
    double wedge_slope = 0.0;
    std::size_t samples_tested = 0;
    std::vector<RegionOverlap> overlaps;
};

// Advisory float check: sample each region's two boundary arcs and test the
// samples against every other edge's region. Never affects exact pipelines.
ProbeReport region_disjointness_probe(const MstEdges& mst, const WedgeSpec& wedge, int resolution);

}  // namespace sumprod
