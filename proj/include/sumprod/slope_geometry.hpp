#pragma once

#include <span>
#include <string>
#include <vector>

#include "sumprod/scalar_set.hpp"

namespace sumprod {

struct GridPoint {
    BigRational x;
    BigRational y;

    GridPoint operator+(const GridPoint& o) const { return GridPoint{x + o.x, y + o.y}; }
    BigRational slope_from_origin() const { return y / x; }  // R(p)
    BigRational sq_norm() const { return x * x + y * y; }
    bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
    auto operator<=>(const GridPoint& o) const {
        auto c = x <=> o.x;
        return c != 0 ? c : y <=> o.y;
    }
    std::string to_string() const { return "(" + x.to_string() + "," + y.to_string() + ")"; }
};

// P = A x A for a set of positive reals.
std::vector<GridPoint> build_grid(const ScalarSet& a);

// Cover of a positive-quadrant point set by lines through the origin, sorted
// by slope; per-line points sorted by increasing squared magnitude.
struct SlopeLine {
    BigRational slope;
    std::vector<GridPoint> points;
};

struct SlopeCover {
    std::vector<SlopeLine> lines;
    std::size_t source_point_count = 0;
};

SlopeCover slope_cover(std::span<const GridPoint> points);

struct RealWitness {
    BigRational ratio;
    std::string provenance;
    GridPoint point;  // the element of P+P realizing the ratio
};

struct RealWitnessReport {
    std::vector<RealWitness> witnesses;
    std::size_t distinct_count = 0;
    std::size_t target_bound = 0;
    bool pass = false;
};

// Constructive witnesses for |(A+A)/(A+A)| >= 2|A|^2 - 1: the vector-sum
// chains between consecutive cover lines plus one diagonal doubling per line.
RealWitnessReport thm1_witnesses(const ScalarSet& a);

// Constructive witnesses for |R(P+P)| >= |P| + 1 on a positive-quadrant point
// set spanning at least two slopes.
RealWitnessReport thm2_witnesses(std::span<const GridPoint> points);

// Number of distinct directions (slopes of q - p, vertical included)
// determined by pairs of distinct points.
std::size_t direction_count(std::span<const GridPoint> points);

}  // namespace sumprod
