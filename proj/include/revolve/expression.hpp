#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "revolve/function.hpp"

namespace revolve {

/// Curvature expressions in the variable x.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | name | name '(' expr ')' | '(' expr ')'
///
/// `^` is right-associative and binds tighter than unary minus, so -x^2 is
/// -(x^2) and 2^-x is 2^(-x). Names other than x and the builtin functions
/// are parameters resolved at parse time; `pi` is predefined.
class Expression {
public:
    enum class Op { Number, Variable, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

    struct Node {
        Op op = Op::Number;
        double value = 0.0;  ///< literal, or the bound value of a parameter
        std::string name;    ///< parameter or function name
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;
    using Params = std::map<std::string, double, std::less<>>;

    Expression() = default;
    explicit Expression(NodePtr root) : root_(std::move(root)) {}

    /// Throws SyntaxError (with byte offset) or UnknownIdentifier.
    static Expression parse(std::string_view text, const Params& params = {});

    /// Throws EvaluationError when an operation leaves its real domain or the
    /// result is not finite.
    double operator()(double x) const;

    /// Symbolic derivative with respect to x.
    Expression derivative() const;

    /// Minimal-parenthesis rendering; parse(to_string()) reproduces the tree.
    std::string to_string() const;

    bool depends_on_x() const;

    /// Function with the symbolic derivative attached.
    ScalarFunction as_function() const;

    const NodePtr& root() const { return root_; }

    friend bool operator==(const Expression& a, const Expression& b);

    static const std::vector<std::string>& functions();

private:
    NodePtr root_;
};

}  // namespace revolve
