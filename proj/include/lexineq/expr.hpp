#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexineq/complex.hpp"
#include "lexineq/solver.hpp"

namespace lexineq {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over complex literals and the variable Z.
struct Expr {
    enum class Op { Literal, Var, Neg, Add, Sub, Mul, Div, Pow };

    Op op = Op::Literal;
    Complex value;          // Literal
    unsigned exponent = 0;  // Pow, >= 1
    ExprPtr lhs, rhs;       // operands; Neg and Pow use lhs only

    static ExprPtr literal(Complex v);
    static ExprPtr var();
    static ExprPtr neg(ExprPtr e);
    static ExprPtr binary(Op op, ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr base, unsigned n);
};

bool structurally_equal(const Expr& a, const Expr& b);
bool mentions_variable(const Expr& e);

/// Throws DivisionByZero when a divisor evaluates to zero.
Complex evaluate(const Expr& e, Complex z);

enum class Relation { Ge, Le };

struct Inequality {
    ExprPtr lhs, rhs;
    Relation relation = Relation::Ge;

    /// Sides arranged so the relation reads lhs >= rhs.
    Inequality as_ge() const;
};

struct SourceExpr {
    std::string text;
    std::vector<Inequality> parts;  // one, or two joined by "&&"
};

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, MultipleVariables, NonIntegerExponent };
    ParseError(Kind k, std::size_t offset, const std::string& msg);
    Kind kind;
    std::size_t offset;  // byte offset into the input
};

/// inequality := expr ('>=' | '<=') expr, optionally two joined by '&&'.
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | primary ('^' INT)?
///   primary := NUMBER | NUMBER 'i' | 'i' | 'Z' | '(' expr ')'
/// A real literal followed by '+'/'-' and an imaginary literal folds into one
/// complex literal, and negation of a literal folds into the literal.
SourceExpr parse(std::string_view text);
ExprPtr parse_expression(std::string_view text);

std::string to_string(const Expr& e);
std::string to_string(const SourceExpr& s);

// ---------------------------------------------------------------------------
// Classification into the solvable forms

struct UnsupportedForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClassifiedProblem {
    InequalityProblem problem;
    /// Leading denominator coefficient divided out to reach Z + C (1 otherwise).
    Complex denominator_scale{1.0, 0.0};
    std::string shape;
};

/// Moves everything to one side, normalizes to a rational function of Z and
/// matches it against the linear, quadratic, fractional and system forms.
ClassifiedProblem classify_problem(const SourceExpr& e);

} // namespace lexineq
