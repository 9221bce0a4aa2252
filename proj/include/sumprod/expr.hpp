#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "sumprod/scalar_set.hpp"

namespace sumprod {

// Set-expression DSL:
//   expr := term {("+"|"-") term}
//   term := atom {("*"|"/") atom}
//   atom := NAME | "{" scalar {"," scalar} "}" | "(" expr ")"
//         | "sum(" INT "," expr ")" | "prod(" INT "," expr ")"
// "+"/"-"/"*" are elementwise set operations and "/" is the ratio set;
// sum(k,E) is the k-fold sumset, prod(k,E) the k-fold product set.
struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    enum class Kind { name, literal, binary, fold_sum, fold_product };
    Kind kind;
    std::string name;       // Kind::name
    ScalarSet literal;      // Kind::literal
    char op = 0;            // Kind::binary: '+', '-', '*', '/'
    ExprPtr lhs;
    ExprPtr rhs;
    unsigned fold_k = 0;    // folds
    ExprPtr child;
};

struct ExprSyntaxError : std::runtime_error {
    std::size_t offset;
    ExprSyntaxError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

ExprPtr parse_expr(std::string_view src);

// Canonical fully-parenthesized form; reparsing yields a structurally
// identical tree.
std::string print_expr(const ExprNode& node);

bool expr_equal(const ExprNode& a, const ExprNode& b);

struct EvalResult {
    ScalarSet set;
    std::uint64_t skipped_zero_divisors = 0;
};

using Environment = std::map<std::string, ScalarSet>;

EvalResult eval_expr(const ExprNode& node, const Environment& env, const SetOpOptions& opt = {});

}  // namespace sumprod
