#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumprod/scalar_set.hpp"

namespace sumprod {

using Scalar = std::variant<BigRational, GaussianRational>;

// Scalar grammar: real = INT | INT/POSINT | decimal; complex = (REAL,REAL).
// Whitespace-insensitive. Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

// "{s1, s2, ...}" with scalars from the grammar above. A literal containing
// any complex scalar is complex; bare reals are lifted to (x, 0).
ScalarSet parse_set_literal(std::string_view text, std::uint64_t* duplicates = nullptr);

struct LoadedSet {
    ScalarSet set;
    std::uint64_t duplicates_ignored = 0;
};

// Set file: UTF-8 text, one scalar per line, '#' comments, blank lines
// ignored. Duplicate values are deduplicated silently and counted.
LoadedSet load_set_file(const std::string& path);
LoadedSet parse_set_text(std::string_view text);

ScalarSet set_from_scalars(std::vector<Scalar> scalars, std::uint64_t* duplicates = nullptr);

}  // namespace sumprod
