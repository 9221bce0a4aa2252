#include "sumprod/set_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sumprod {

namespace {

std::string strip_space(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string s = strip_space(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unterminated complex scalar: '" + s + "'");
        std::string_view inner(s.data() + 1, s.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
            throw std::invalid_argument("complex scalar needs exactly one comma: '" + s + "'");
        return GaussianRational(BigRational::from_string(inner.substr(0, comma)),
                                BigRational::from_string(inner.substr(comma + 1)));
    }
    return BigRational::from_string(s);
}

ScalarSet set_from_scalars(std::vector<Scalar> scalars, std::uint64_t* duplicates) {
    bool any_complex = false;
    for (const auto& v : scalars)
        if (std::holds_alternative<GaussianRational>(v)) any_complex = true;
    std::uint64_t dups = 0;
    ScalarSet out;
    if (any_complex) {
        std::vector<GaussianRational> xs;
        xs.reserve(scalars.size());
        for (auto& v : scalars) {
            if (auto* g = std::get_if<GaussianRational>(&v))
                xs.push_back(std::move(*g));
            else
                xs.push_back(GaussianRational::from_real(std::move(std::get<BigRational>(v))));
        }
        out = ScalarSet::of_complexes(std::move(xs));
    } else {
        std::vector<BigRational> xs;
        xs.reserve(scalars.size());
        for (auto& v : scalars) xs.push_back(std::move(std::get<BigRational>(v)));
        out = ScalarSet::of_reals(std::move(xs));
    }
    dups = scalars.size() - out.size();
    if (duplicates) *duplicates = dups;
    return out;
}

ScalarSet parse_set_literal(std::string_view text, std::uint64_t* duplicates) {
    std::string s = strip_space(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("set literal must be braced: '" + s + "'");
    std::string_view inner(s.data() + 1, s.size() - 2);
    std::vector<Scalar> scalars;
    // split on commas at paren depth 0 (complex scalars contain commas)
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
            if (i > start) scalars.push_back(parse_scalar(inner.substr(start, i - start)));
            else if (i < inner.size()) throw std::invalid_argument("empty element in set literal");
            start = i + 1;
        } else if (inner[i] == '(') {
            ++depth;
        } else if (inner[i] == ')') {
            --depth;
        }
    }
    if (scalars.empty()) throw std::invalid_argument("empty set literal");
    return set_from_scalars(std::move(scalars), duplicates);
}

LoadedSet parse_set_text(std::string_view text) {
    std::vector<Scalar> scalars;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::string body = strip_space(line);
        if (body.empty()) continue;
        scalars.push_back(parse_scalar(body));
    }
    if (scalars.empty()) throw std::invalid_argument("set file contains no scalars");
    LoadedSet out;
    out.set = set_from_scalars(std::move(scalars), &out.duplicates_ignored);
    return out;
}

LoadedSet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_text(buf.str());
}

}  // namespace sumprod
