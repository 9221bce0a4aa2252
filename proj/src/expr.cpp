#include "sumprod/expr.hpp"

#include <cctype>

#include "sumprod/set_io.hpp"

namespace sumprod {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = expression();
        skip_ws();
        if (pos_ != src_.size()) throw ExprSyntaxError("syntax error: trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ExprSyntaxError(std::string("syntax error: expected ") + what, pos_);
    }

    ExprPtr expression() {
        ExprPtr lhs = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            ExprPtr rhs = term();
            lhs = binary(c, std::move(lhs), std::move(rhs));
        }
    }

    ExprPtr term() {
        ExprPtr lhs = atom();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            ExprPtr rhs = atom();
            lhs = binary(c, std::move(lhs), std::move(rhs));
        }
    }

    ExprPtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expression();
            expect(')', "')'");
            return e;
        }
        if (c == '{') return literal();
        if (name_start(c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && name_char(src_[pos_])) ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            if (name == "sum" || name == "prod") return fold(name == "sum", start);
            auto node = std::make_unique<ExprNode>();
            node->kind = ExprNode::Kind::name;
            node->name = std::move(name);
            return node;
        }
        throw ExprSyntaxError("syntax error: expected a set expression", pos_);
    }

    ExprPtr literal() {
        std::size_t start = pos_;
        expect('{', "'{'");
        auto close = src_.find('}', pos_);
        if (close == std::string_view::npos)
            throw ExprSyntaxError("syntax error: unterminated set literal", start);
        std::string_view body = src_.substr(start, close - start + 1);
        pos_ = close + 1;
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::literal;
        try {
            node->literal = parse_set_literal(body);
        } catch (const std::invalid_argument& e) {
            throw ExprSyntaxError(std::string("syntax error: ") + e.what(), start);
        }
        return node;
    }

    ExprPtr fold(bool is_sum, std::size_t start) {
        expect('(', "'(' after fold keyword");
        skip_ws();
        std::size_t kstart = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == kstart) throw ExprSyntaxError("syntax error: expected fold count", pos_);
        unsigned long k = std::stoul(std::string(src_.substr(kstart, pos_ - kstart)));
        if (k < 1) throw ExprSyntaxError("fold count must be >= 1", kstart);
        if (k > 1u << 20) throw ExprSyntaxError("fold count too large", kstart);
        expect(',', "',' after fold count");
        ExprPtr child = expression();
        expect(')', "')'");
        (void)start;
        auto node = std::make_unique<ExprNode>();
        node->kind = is_sum ? ExprNode::Kind::fold_sum : ExprNode::Kind::fold_product;
        node->fold_k = static_cast<unsigned>(k);
        node->child = std::move(child);
        return node;
    }

    static ExprPtr binary(char op, ExprPtr lhs, ExprPtr rhs) {
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::binary;
        node->op = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).run(); }

std::string print_expr(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Kind::name: return node.name;
        case ExprNode::Kind::literal: return "{" + node.literal.canonical_string() + "}";
        case ExprNode::Kind::binary:
            return "(" + print_expr(*node.lhs) + node.op + print_expr(*node.rhs) + ")";
        case ExprNode::Kind::fold_sum:
            return "sum(" + std::to_string(node.fold_k) + "," + print_expr(*node.child) + ")";
        case ExprNode::Kind::fold_product:
            return "prod(" + std::to_string(node.fold_k) + "," + print_expr(*node.child) + ")";
    }
    throw std::logic_error("unreachable");
}

bool expr_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::name: return a.name == b.name;
        case ExprNode::Kind::literal: return a.literal == b.literal;
        case ExprNode::Kind::binary:
            return a.op == b.op && expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
        case ExprNode::Kind::fold_sum:
        case ExprNode::Kind::fold_product:
            return a.fold_k == b.fold_k && expr_equal(*a.child, *b.child);
    }
    return false;
}

EvalResult eval_expr(const ExprNode& node, const Environment& env, const SetOpOptions& opt) {
    switch (node.kind) {
        case ExprNode::Kind::name: {
            auto it = env.find(node.name);
            if (it == env.end()) throw std::invalid_argument("unbound set name: " + node.name);
            return EvalResult{it->second, 0};
        }
        case ExprNode::Kind::literal: return EvalResult{node.literal, 0};
        case ExprNode::Kind::binary: {
            EvalResult l = eval_expr(*node.lhs, env, opt);
            EvalResult r = eval_expr(*node.rhs, env, opt);
            PairOp op = node.op == '+'   ? PairOp::add
                        : node.op == '-' ? PairOp::sub
                        : node.op == '*' ? PairOp::mul
                                         : PairOp::div;
            SetOpOptions exact = opt;
            exact.early_exit_target.reset();
            auto res = pairwise(l.set, r.set, op, exact);
            return EvalResult{std::move(res.set), l.skipped_zero_divisors + r.skipped_zero_divisors +
                                                      res.skipped_zero_divisors};
        }
        case ExprNode::Kind::fold_sum: {
            EvalResult c = eval_expr(*node.child, env, opt);
            SetOpOptions exact = opt;
            exact.early_exit_target.reset();
            auto res = kfold_sum(c.set, node.fold_k, exact);
            return EvalResult{std::move(*res.set), c.skipped_zero_divisors};
        }
        case ExprNode::Kind::fold_product: {
            EvalResult c = eval_expr(*node.child, env, opt);
            SetOpOptions exact = opt;
            exact.early_exit_target.reset();
            return EvalResult{kfold_product(c.set, node.fold_k, exact), c.skipped_zero_divisors};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace sumprod
