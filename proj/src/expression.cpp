#include "revolve/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "revolve/error.hpp"

namespace revolve {

namespace {

using Op = Expression::Op;
using Node = Expression::Node;
using NodePtr = Expression::NodePtr;

NodePtr number(double v)
{
    auto n = std::make_shared<Node>();
    n->op = Op::Number;
    n->value = v;
    return n;
}

NodePtr variable()
{
    auto n = std::make_shared<Node>();
    n->op = Op::Variable;
    return n;
}

NodePtr unary(Op op, NodePtr a, std::string name = {})
{
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->name = std::move(name);
    return n;
}

NodePtr binary(Op op, NodePtr a, NodePtr b)
{
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

bool is_number(const NodePtr& n, double v) { return n->op == Op::Number && n->value == v; }

// Constructors that fold the trivial cases produced by differentiation.
NodePtr add(NodePtr a, NodePtr b)
{
    if (is_number(a, 0))
        return b;
    if (is_number(b, 0))
        return a;
    return binary(Op::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b)
{
    if (is_number(b, 0))
        return a;
    if (is_number(a, 0))
        return unary(Op::Neg, std::move(b));
    return binary(Op::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b)
{
    if (is_number(a, 0) || is_number(b, 0))
        return number(0);
    if (is_number(a, 1))
        return b;
    if (is_number(b, 1))
        return a;
    return binary(Op::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b)
{
    if (is_number(a, 0))
        return number(0);
    if (is_number(b, 1))
        return a;
    return binary(Op::Div, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a)
{
    if (is_number(a, 0))
        return a;
    return unary(Op::Neg, std::move(a));
}

NodePtr call(const std::string& f, NodePtr a) { return unary(Op::Call, std::move(a), f); }

const std::vector<std::string> builtin = {"sin",  "cos",  "tan",  "sinh", "cosh",
                                          "tanh", "exp",  "ln",   "sqrt", "asin",
                                          "acos", "atan", "acosh", "abs"};

class Parser {
public:
    Parser(std::string_view text, const Expression::Params& params) : text_(text), params_(params)
    {
    }

    NodePtr parse()
    {
        NodePtr e = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = binary(Op::Add, lhs, term());
            else if (accept('-'))
                lhs = binary(Op::Sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary_expr();
        for (;;) {
            if (accept('*'))
                lhs = binary(Op::Mul, lhs, unary_expr());
            else if (accept('/'))
                lhs = binary(Op::Div, lhs, unary_expr());
            else
                return lhs;
        }
    }

    NodePtr unary_expr()
    {
        if (accept('-'))
            return unary(Op::Neg, unary_expr());
        return power();
    }

    NodePtr power()
    {
        NodePtr base = primary();
        if (accept('^'))
            return binary(Op::Pow, base, unary_expr());
        return base;
    }

    NodePtr primary()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return name();
        if (accept('(')) {
            NodePtr e = expr();
            if (!accept(')'))
                fail("expected ')'");
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr literal()
    {
        const std::size_t start = pos_;
        auto digits = [this] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t count = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) {
            pos_ = start;
            fail("malformed number");
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
                ++pos_;
            if (digits() == 0) {
                pos_ = mark;
                fail("malformed exponent");
            }
        }
        const std::string token(text_.substr(start, pos_ - start));
        return number(std::strtod(token.c_str(), nullptr));
    }

    NodePtr name()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string id(text_.substr(start, pos_ - start));
        if (std::find(builtin.begin(), builtin.end(), id) != builtin.end()) {
            if (!accept('('))
                fail("expected '(' after " + id);
            NodePtr arg = expr();
            if (!accept(')'))
                fail("expected ')'");
            return call(id, arg);
        }
        if (id == "x")
            return variable();
        auto n = std::make_shared<Node>();
        n->op = Op::Param;
        n->name = id;
        if (auto it = params_.find(id); it != params_.end())
            n->value = it->second;
        else if (id == "pi")
            n->value = std::numbers::pi;
        else
            throw Error(ErrorKind::UnknownIdentifier,
                        "unknown identifier '" + id + "' at offset " + std::to_string(start));
        return n;
    }

    std::string_view text_;
    const Expression::Params& params_;
    std::size_t pos_ = 0;
};

[[noreturn]] void domain_error(const std::string& what, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    throw Error(ErrorKind::EvaluationError, what + " at x = " + buf);
}

double eval(const Node& n, double x)
{
    switch (n.op) {
    case Op::Number:
    case Op::Param:
        return n.value;
    case Op::Variable:
        return x;
    case Op::Neg:
        return -eval(*n.lhs, x);
    case Op::Add:
        return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Op::Sub:
        return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Op::Mul:
        return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Op::Div: {
        const double d = eval(*n.rhs, x);
        if (d == 0)
            domain_error("division by zero", x);
        return eval(*n.lhs, x) / d;
    }
    case Op::Pow: {
        const double b = eval(*n.lhs, x);
        const double e = eval(*n.rhs, x);
        if (b < 0 && e != std::trunc(e))
            domain_error("negative base with non-integer exponent", x);
        if (b == 0 && e < 0)
            domain_error("zero raised to a negative power", x);
        return std::pow(b, e);
    }
    case Op::Call: {
        const double a = eval(*n.lhs, x);
        const std::string& f = n.name;
        if (f == "sin")
            return std::sin(a);
        if (f == "cos")
            return std::cos(a);
        if (f == "tan")
            return std::tan(a);
        if (f == "sinh")
            return std::sinh(a);
        if (f == "cosh")
            return std::cosh(a);
        if (f == "tanh")
            return std::tanh(a);
        if (f == "exp")
            return std::exp(a);
        if (f == "ln") {
            if (a <= 0)
                domain_error("ln of a non-positive value", x);
            return std::log(a);
        }
        if (f == "sqrt") {
            if (a < 0)
                domain_error("sqrt of a negative value", x);
            return std::sqrt(a);
        }
        if (f == "asin" || f == "acos") {
            if (a < -1 || a > 1)
                domain_error(f + " outside [-1, 1]", x);
            return f == "asin" ? std::asin(a) : std::acos(a);
        }
        if (f == "atan")
            return std::atan(a);
        if (f == "acosh") {
            if (a < 1)
                domain_error("acosh below 1", x);
            return std::acosh(a);
        }
        return std::abs(a);
    }
    }
    return 0.0;
}

bool has_x(const Node& n)
{
    if (n.op == Op::Variable)
        return true;
    return (n.lhs && has_x(*n.lhs)) || (n.rhs && has_x(*n.rhs));
}

NodePtr derive(const NodePtr& n)
{
    switch (n->op) {
    case Op::Number:
    case Op::Param:
        return number(0);
    case Op::Variable:
        return number(1);
    case Op::Neg:
        return neg(derive(n->lhs));
    case Op::Add:
        return add(derive(n->lhs), derive(n->rhs));
    case Op::Sub:
        return sub(derive(n->lhs), derive(n->rhs));
    case Op::Mul:
        return add(mul(derive(n->lhs), n->rhs), mul(n->lhs, derive(n->rhs)));
    case Op::Div:
        return div(sub(mul(derive(n->lhs), n->rhs), mul(n->lhs, derive(n->rhs))),
                   binary(Op::Pow, n->rhs, number(2)));
    case Op::Pow: {
        const NodePtr& u = n->lhs;
        const NodePtr& v = n->rhs;
        if (!has_x(*v)) {
            NodePtr lowered = binary(Op::Pow, u, sub(v, number(1)));
            return mul(mul(v, lowered), derive(u));
        }
        return mul(n, add(mul(derive(v), call("ln", u)), div(mul(v, derive(u)), u)));
    }
    case Op::Call: {
        const NodePtr& u = n->lhs;
        const std::string& f = n->name;
        NodePtr outer;
        if (f == "sin")
            outer = call("cos", u);
        else if (f == "cos")
            outer = neg(call("sin", u));
        else if (f == "tan")
            outer = div(number(1), binary(Op::Pow, call("cos", u), number(2)));
        else if (f == "sinh")
            outer = call("cosh", u);
        else if (f == "cosh")
            outer = call("sinh", u);
        else if (f == "tanh")
            outer = sub(number(1), binary(Op::Pow, call("tanh", u), number(2)));
        else if (f == "exp")
            outer = n;
        else if (f == "ln")
            outer = div(number(1), u);
        else if (f == "sqrt")
            outer = div(number(1), mul(number(2), n));
        else if (f == "asin")
            outer = div(number(1),
                        call("sqrt", sub(number(1), binary(Op::Pow, u, number(2)))));
        else if (f == "acos")
            outer = neg(div(number(1),
                            call("sqrt", sub(number(1), binary(Op::Pow, u, number(2))))));
        else if (f == "atan")
            outer = div(number(1), add(number(1), binary(Op::Pow, u, number(2))));
        else if (f == "acosh")
            outer = div(number(1),
                        call("sqrt", sub(binary(Op::Pow, u, number(2)), number(1))));
        else
            outer = div(u, n);
        return mul(outer, derive(u));
    }
    }
    return number(0);
}

int precedence(const Node& n)
{
    switch (n.op) {
    case Op::Add:
    case Op::Sub:
        return 1;
    case Op::Mul:
    case Op::Div:
        return 2;
    case Op::Neg:
        return 3;
    case Op::Pow:
        return 4;
    default:
        return 5;
    }
}

void render(const Node& n, std::string& out);

void render_wrapped(const Node& n, bool wrap, std::string& out)
{
    if (wrap)
        out += '(';
    render(n, out);
    if (wrap)
        out += ')';
}

void render(const Node& n, std::string& out)
{
    const int p = precedence(n);
    switch (n.op) {
    case Op::Number: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n.value);
        out += buf;
        return;
    }
    case Op::Variable:
        out += 'x';
        return;
    case Op::Param:
        out += n.name;
        return;
    case Op::Neg:
        out += '-';
        render_wrapped(*n.lhs, precedence(*n.lhs) < 3, out);
        return;
    case Op::Call:
        out += n.name;
        out += '(';
        render(*n.lhs, out);
        out += ')';
        return;
    case Op::Pow:
        render_wrapped(*n.lhs, precedence(*n.lhs) <= 4, out);
        out += '^';
        render_wrapped(*n.rhs, precedence(*n.rhs) < 3, out);
        return;
    default: {
        static constexpr char symbol[] = {'+', '-', '*', '/'};
        const int idx = static_cast<int>(n.op) - static_cast<int>(Op::Add);
        render_wrapped(*n.lhs, precedence(*n.lhs) < p, out);
        out += ' ';
        out += symbol[idx];
        out += ' ';
        render_wrapped(*n.rhs, precedence(*n.rhs) <= p, out);
        return;
    }
    }
}

bool same(const NodePtr& a, const NodePtr& b)
{
    if (!a || !b)
        return !a && !b;
    if (a->op != b->op || a->name != b->name)
        return false;
    if ((a->op == Op::Number || a->op == Op::Param) && a->value != b->value)
        return false;
    return same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
}

}  // namespace

Expression Expression::parse(std::string_view text, const Params& params)
{
    return Expression(Parser(text, params).parse());
}

double Expression::operator()(double x) const
{
    if (!root_)
        throw Error(ErrorKind::EvaluationError, "empty expression");
    const double v = eval(*root_, x);
    if (!std::isfinite(v))
        domain_error("non-finite result", x);
    return v;
}

Expression Expression::derivative() const { return Expression(derive(root_)); }

std::string Expression::to_string() const
{
    std::string out;
    if (root_)
        render(*root_, out);
    return out;
}

bool Expression::depends_on_x() const { return root_ && has_x(*root_); }

ScalarFunction Expression::as_function() const
{
    Expression d = derivative();
    return ScalarFunction([self = *this](double x) { return self(x); },
                          [d](double x) { return d(x); });
}

bool operator==(const Expression& a, const Expression& b) { return same(a.root_, b.root_); }

const std::vector<std::string>& Expression::functions() { return builtin; }

}  // namespace revolve
