#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "sumprod/expr.hpp"
#include "sumprod/svg.hpp"
#include "sumprod/verify.hpp"

using namespace sumprod;

namespace {

ScalarSet ints(std::vector<long long> v) {
    std::vector<BigRational> r;
    for (auto x : v) r.emplace_back(x);
    return ScalarSet::of_reals(std::move(r));
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

// random AST generator for the round-trip suite
ExprPtr random_ast(Lcg& rng, int depth) {
    auto node = std::make_unique<ExprNode>();
    const unsigned pick = depth <= 0 ? rng.next32() % 2 : rng.next32() % 5;
    switch (pick) {
        case 0: {
            node->kind = ExprNode::Kind::name;
            node->name = std::string(1, static_cast<char>('A' + rng.next32() % 3));
            return node;
        }
        case 1: {
            node->kind = ExprNode::Kind::literal;
            std::vector<BigRational> xs;
            unsigned n = 1 + rng.next32() % 3;
            for (unsigned i = 0; i < n; ++i)
                xs.push_back(BigRational(BigInt(static_cast<long long>(rng.draw(9)) * rng.draw_sign()),
                                         BigInt(static_cast<long long>(rng.draw(9)))));
            node->literal = ScalarSet::of_reals(std::move(xs));
            return node;
        }
        case 2: {
            node->kind = ExprNode::Kind::binary;
            const char ops[] = {'+', '-', '*', '/'};
            node->op = ops[rng.next32() % 4];
            node->lhs = random_ast(rng, depth - 1);
            node->rhs = random_ast(rng, depth - 1);
            return node;
        }
        case 3: {
            node->kind = ExprNode::Kind::fold_sum;
            node->fold_k = 1 + rng.next32() % 3;
            node->child = random_ast(rng, depth - 1);
            return node;
        }
        default: {
            node->kind = ExprNode::Kind::fold_product;
            node->fold_k = 1 + rng.next32() % 3;
            node->child = random_ast(rng, depth - 1);
            return node;
        }
    }
}

}  // namespace

TEST_CASE("parse structure") {
    auto ast = parse_expr("(A+A)/(A+A)");
    REQUIRE(ast->kind == ExprNode::Kind::binary);
    CHECK(ast->op == '/');
    CHECK(ast->lhs->kind == ExprNode::Kind::binary);
    CHECK(ast->lhs->op == '+');
    CHECK(ast->lhs->lhs->kind == ExprNode::Kind::name);
    CHECK(ast->lhs->lhs->name == "A");

    auto fold = parse_expr("sum(4, prod(2, A))");
    REQUIRE(fold->kind == ExprNode::Kind::fold_sum);
    CHECK(fold->fold_k == 4);
    REQUIRE(fold->child->kind == ExprNode::Kind::fold_product);
    CHECK(fold->child->fold_k == 2);
    CHECK(fold->child->child->name == "A");

    CHECK_THROWS_AS(parse_expr("A+"), ExprSyntaxError);
    try {
        parse_expr("A+");
    } catch (const ExprSyntaxError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_expr("sum(0,A)"), ExprSyntaxError);
    CHECK_THROWS_AS(parse_expr("(A"), ExprSyntaxError);
    CHECK_THROWS_AS(parse_expr("A B"), ExprSyntaxError);
    CHECK_THROWS_AS(parse_expr(""), ExprSyntaxError);
    CHECK_THROWS_AS(parse_expr("{1,"), ExprSyntaxError);
}

TEST_CASE("evaluation") {
    Environment env;
    env.emplace("A", ints({1, 2}));
    CHECK(eval_expr(*parse_expr("(A+A)/(A+A)"), env).set.size() == 7);
    CHECK(eval_expr(*parse_expr("{1,2}+{1,2}"), env).set == ints({2, 3, 4}));

    Environment env3;
    env3.emplace("A", ints({1, 2, 3}));
    CHECK(eval_expr(*parse_expr("(A+A)/(A+A)"), env3).set.size() == 17);
    // sum(4, prod(2, A)) is AA+AA+AA+AA
    CHECK(eval_expr(*parse_expr("sum(4, prod(2, A))"), env3).set.size() ==
          kfold_sum(kfold_product(ints({1, 2, 3}), 2), 4).set->size());

    CHECK_THROWS_AS(eval_expr(*parse_expr("B+B"), env), std::invalid_argument);
    CHECK_THROWS_AS(eval_expr(*parse_expr("{1}/{0}"), env), std::domain_error);
    CHECK_THROWS_AS(eval_expr(*parse_expr("{1,2}+{(0,1)}"), env), std::invalid_argument);

    // ratio sets skip zero divisors and report the skipped pairs
    auto res = eval_expr(*parse_expr("{1,2}/{0,1}"), env);
    CHECK(res.set == ints({1, 2}));
    CHECK(res.skipped_zero_divisors == 2);
}

TEST_CASE("precedence: '*' and '/' bind tighter than '+' and '-'") {
    Environment env;
    auto mixed = eval_expr(*parse_expr("{1,2}+{1,2}*{2}"), env).set;
    auto grouped = eval_expr(*parse_expr("{1,2}+({1,2}*{2})"), env).set;
    auto sum_first = eval_expr(*parse_expr("({1,2}+{1,2})*{2}"), env).set;
    // oracle by hand: {1,2}*{2} = {2,4}; {1,2}+{2,4} = {3,4,5,6}
    CHECK(mixed == ints({3, 4, 5, 6}));
    CHECK(mixed == grouped);
    CHECK(sum_first == ints({4, 6, 8}));
    CHECK_FALSE(mixed == sum_first);
}

TEST_CASE("print/parse round trip on 1000 random ASTs of depth <= 5") {
    Lcg rng(606);
    for (int i = 0; i < 1000; ++i) {
        ExprPtr ast = random_ast(rng, 1 + static_cast<int>(rng.next32() % 5));
        std::string printed = print_expr(*ast);
        ExprPtr reparsed = parse_expr(printed);
        CHECK(expr_equal(*ast, *reparsed));
        CHECK(print_expr(*reparsed) == printed);
    }
}

TEST_CASE("slope-cover SVG: deterministic, correct object counts") {
    ScalarSet a = ints({1, 2, 3});
    std::string svg = render_slope_cover_svg(a);
    CHECK(svg == render_slope_cover_svg(a));
    CHECK(count_occurrences(svg, "class=\"cover-line\"") == 7);
    CHECK(count_occurrences(svg, "class=\"witness\"") == 17);
    CHECK(count_occurrences(svg, "class=\"gridpt\"") == 9);
    CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
    CHECK(svg.find("<g id=\"axes\">") < svg.find("<g id=\"lines\">"));
    CHECK(svg.find("<g id=\"lines\">") < svg.find("<g id=\"points\">"));
    CHECK(svg.find("<g id=\"points\">") < svg.find("<g id=\"witnesses\">"));
}

TEST_CASE("complex-mst SVG") {
    ScalarSet a = ScalarSet::of_complexes({GaussianRational(BigRational(1), BigRational(0)),
                                           GaussianRational(BigRational(0), BigRational(1))});
    WedgeSpec w(BigRational(BigInt(1), BigInt(8)));
    std::string svg = render_complex_mst_svg(a, w);
    CHECK(svg == render_complex_mst_svg(a, w));
    CHECK(count_occurrences(svg, "class=\"ratiopt\"") == 3);
    CHECK(count_occurrences(svg, "class=\"mst-edge\"") == 2);
    CHECK(count_occurrences(svg, "class=\"region\"") == 4);  // two arcs per edge
    CHECK_THROWS_AS(render_complex_mst_svg(ScalarSet::of_complexes({}), w), std::invalid_argument);
}
