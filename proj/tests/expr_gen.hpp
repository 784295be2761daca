#pragma once

// Random expression generators for parser property tests. Coefficients are
// small dyadic rationals so polynomial normalization is exact in doubles.

#include <random>

#include "lexineq/expr.hpp"

namespace lexineq::testing {

class ExprGen {
public:
    explicit ExprGen(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    double dyadic(int span = 16, int denom = 4) {
        return static_cast<double>(static_cast<int>(g_() % static_cast<unsigned>(2 * span + 1)) - span) / denom;
    }
    Complex coefficient() {
        switch (g_() % 4) {
        case 0: return {dyadic(), 0.0};
        case 1: return {0.0, dyadic()};
        default: return {dyadic(), dyadic()};
        }
    }
    Complex probe() { return {dyadic(32, 8), dyadic(32, 8)}; }

    /// Arbitrary tree, used for print/parse round trips.
    ExprPtr any(int depth) {
        if (depth <= 0 || g_() % 4 == 0) return g_() % 2 ? Expr::var() : Expr::literal(coefficient());
        switch (g_() % 7) {
        case 0: return Expr::neg(any(depth - 1));
        case 1: return Expr::pow(any(depth - 1), static_cast<unsigned>(g_() % 3 + 1));
        case 2: return Expr::binary(Expr::Op::Add, any(depth - 1), any(depth - 1));
        case 3: return Expr::binary(Expr::Op::Sub, any(depth - 1), any(depth - 1));
        case 4: return Expr::binary(Expr::Op::Mul, any(depth - 1), any(depth - 1));
        default: return Expr::binary(Expr::Op::Div, any(depth - 1), any(depth - 1));
        }
    }

    /// Polynomial tree of degree at most `degree` built from sums, products,
    /// negations and powers.
    ExprPtr poly(int degree, int depth = 2) {
        if (degree == 0 || depth == 0) {
            if (degree >= 1 && g_() % 2) return Expr::var();
            return Expr::literal(coefficient());
        }
        switch (g_() % 5) {
        case 0: return Expr::neg(poly(degree, depth - 1));
        case 1: return Expr::binary(Expr::Op::Add, poly(degree, depth - 1), poly(degree, depth - 1));
        case 2: return Expr::binary(Expr::Op::Sub, poly(degree, depth - 1), poly(degree, depth - 1));
        case 3: {
            const int left = degree >= 1 ? static_cast<int>(g_() % static_cast<unsigned>(degree + 1)) : 0;
            return Expr::binary(Expr::Op::Mul, poly(left, depth - 1), poly(degree - left, depth - 1));
        }
        default:
            if (degree >= 2) return Expr::pow(poly(1, depth - 1), 2);
            return Expr::binary(Expr::Op::Mul, Expr::literal(coefficient()), Expr::var());
        }
    }

    /// Linear denominator whose leading coefficient divides out exactly.
    ExprPtr monic_friendly_denominator() {
        static const Complex leads[] = {{1, 0}, {2, 0}, {-1, 0}, {0.5, 0}, {0, 1}, {0, -2}};
        const Complex lead = leads[g_() % 6];
        ExprPtr z = lead == Complex{1, 0} ? Expr::var() : Expr::binary(Expr::Op::Mul, Expr::literal(lead), Expr::var());
        return Expr::binary(Expr::Op::Add, z, Expr::literal(coefficient()));
    }

    /// Inequality in one of the solvable forms, sides occasionally swapped.
    SourceExpr solvable() {
        SourceExpr s;
        auto relation = [&](ExprPtr big, ExprPtr other) {
            if (g_() % 2) return Inequality{std::move(big), std::move(other), Relation::Ge};
            return Inequality{std::move(other), std::move(big), Relation::Le};
        };
        switch (g_() % 4) {
        case 0: s.parts.push_back(relation(poly(1), poly(1))); break;
        case 1: s.parts.push_back(relation(poly(2), poly(1))); break;
        case 2: {
            auto frac = Expr::binary(Expr::Op::Div, poly(1, 1), monic_friendly_denominator());
            s.parts.push_back(relation(std::move(frac), Expr::literal(coefficient())));
            break;
        }
        default:
            s.parts.push_back(relation(poly(1), poly(1)));
            s.parts.push_back(relation(poly(1), poly(1)));
            break;
        }
        return s;
    }

private:
    std::mt19937_64 g_;
};

} // namespace lexineq::testing
