#include <algorithm>
#include <string>

#include "lexineq/expr.hpp"

namespace lexineq {

namespace {

// Dense complex polynomial, coefficients lowest degree first, trailing exact
// zeros trimmed. The zero polynomial has no coefficients.
struct Poly {
    std::vector<Complex> c;

    static Poly constant(Complex v) { return Poly{{v}}.trimmed(); }

    Poly trimmed() && {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        return std::move(*this);
    }
    Poly trimmed() const& { return Poly(*this).trimmed(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    Complex coef(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Complex{}; }
    Complex lead() const { return c.back(); }
};

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coef(static_cast<int>(k)) + b.coef(static_cast<int>(k));
    return std::move(r).trimmed();
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return std::move(r).trimmed();
}

Poly divide_by(const Poly& a, Complex s) {
    Poly r = a;
    for (auto& v : r.c) v = v / s;
    return std::move(r).trimmed();
}

double max_abs(const Poly& p) {
    double m = 0.0;
    for (const auto& v : p.c) m = std::max(m, abs(v));
    return m;
}

// Long division; the remainder is dropped when every coefficient is within
// `tol` of zero.
struct DivMod {
    Poly quot, rem;
};

DivMod divmod(Poly a, const Poly& b, double tol) {
    Poly q;
    if (a.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Complex{});
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        const Complex f = a.lead() / b.lead();
        q.c[static_cast<std::size_t>(shift)] = f;
        for (int k = 0; k <= b.degree(); ++k) {
            auto& slot = a.c[static_cast<std::size_t>(k + shift)];
            slot = slot - f * b.c[static_cast<std::size_t>(k)];
        }
        a.c.pop_back();  // leading term cancels by construction
        a = std::move(a).trimmed();
        while (!a.is_zero() && abs(a.lead()) <= tol) a.c.pop_back();
    }
    return {std::move(q).trimmed(), std::move(a)};
}

Poly gcd(Poly a, Poly b, double tol) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && max_abs(b) > tol) {
        auto dm = divmod(a, b, tol);
        a = std::move(b);
        b = std::move(dm.rem);
    }
    return a;
}

struct Rational {
    Poly num, den;

    // Constant denominators are folded into the numerator.
    Rational reduced() && {
        if (den.degree() == 0) {
            num = divide_by(num, den.c[0]);
            den = Poly::constant({1.0, 0.0});
        }
        if (num.is_zero()) den = Poly::constant({1.0, 0.0});
        return std::move(*this);
    }
};

Rational combine(const Rational& a, const Rational& b, bool subtract) {
    if (a.den.c == b.den.c) return Rational{subtract ? a.num - b.num : a.num + b.num, a.den}.reduced();
    Poly l = a.num * b.den;
    Poly r = b.num * a.den;
    return Rational{subtract ? l - r : l + r, a.den * b.den}.reduced();
}

Rational to_rational(const Expr& e) {
    const Poly one = Poly::constant({1.0, 0.0});
    switch (e.op) {
    case Expr::Op::Literal: return {Poly::constant(e.value), one};
    case Expr::Op::Var: return {Poly{{Complex{}, Complex{1.0, 0.0}}}, one};
    case Expr::Op::Neg: {
        auto r = to_rational(*e.lhs);
        return {-r.num, r.den};
    }
    case Expr::Op::Add: return combine(to_rational(*e.lhs), to_rational(*e.rhs), false);
    case Expr::Op::Sub: return combine(to_rational(*e.lhs), to_rational(*e.rhs), true);
    case Expr::Op::Mul: {
        auto a = to_rational(*e.lhs);
        auto b = to_rational(*e.rhs);
        return Rational{a.num * b.num, a.den * b.den}.reduced();
    }
    case Expr::Op::Div: {
        auto a = to_rational(*e.lhs);
        auto b = to_rational(*e.rhs);
        if (b.num.is_zero()) throw UnsupportedForm("division by an expression that is identically zero");
        return Rational{a.num * b.den, a.den * b.num}.reduced();
    }
    case Expr::Op::Pow: {
        const auto base = to_rational(*e.lhs);
        Rational acc = base;
        for (unsigned k = 1; k < e.exponent; ++k) acc = Rational{acc.num * base.num, acc.den * base.den}.reduced();
        return acc;
    }
    }
    throw UnsupportedForm("unknown expression node");
}

// Cancels common polynomial factors when the denominator is not linear.
Rational cancel(Rational r) {
    if (r.den.degree() < 2 || r.num.is_zero()) return r;
    const double tol = 1e-12 * std::max({1.0, max_abs(r.num), max_abs(r.den)});
    Poly g = gcd(r.num, r.den, tol);
    if (g.degree() < 1) return r;
    auto n = divmod(r.num, g, tol);
    auto d = divmod(r.den, g, tol);
    return Rational{std::move(n.quot), std::move(d.quot)}.reduced();
}

std::string shape_of(const Rational& r) {
    if (r.den.degree() == 0) return "polynomial of degree " + std::to_string(std::max(r.num.degree(), 0));
    return "rational function, numerator degree " + std::to_string(std::max(r.num.degree(), 0)) +
           " over denominator degree " + std::to_string(r.den.degree());
}

bool is_constant(const Rational& r) { return r.den.degree() == 0 && r.num.degree() <= 0; }

ClassifiedProblem classify_one(const Inequality& raw) {
    const Inequality q = raw.as_ge();
    const Rational lhs = cancel(to_rational(*q.lhs));
    const Rational rhs = cancel(to_rational(*q.rhs));

    // (num)/(den) >= constant keeps the constant as D
    if (lhs.den.degree() == 1 && lhs.num.degree() <= 1 && is_constant(rhs)) {
        const Complex s = lhs.den.lead();
        ClassifiedProblem out{Fractional{lhs.num.coef(1) / s, lhs.num.coef(0) / s, lhs.den.coef(0) / s, rhs.num.coef(0)},
                              s, shape_of(lhs) + " against a constant"};
        return out;
    }

    const Rational f = cancel(combine(lhs, rhs, true));
    const std::string shape = shape_of(f);
    if (f.den.degree() == 0) {
        switch (std::max(f.num.degree(), 0)) {
        case 0:
        case 1: return {Linear{f.num.coef(1), -f.num.coef(0)}, {1.0, 0.0}, shape};
        case 2: return {Quadratic{f.num.coef(2), f.num.coef(1), f.num.coef(0)}, {1.0, 0.0}, shape};
        default: throw UnsupportedForm("unsupported form: " + shape + " (at most quadratic is solvable)");
        }
    }
    if (f.den.degree() == 1 && f.num.degree() <= 1) {
        const Complex s = f.den.lead();
        return {Fractional{f.num.coef(1) / s, f.num.coef(0) / s, f.den.coef(0) / s, Complex{}}, s, shape};
    }
    throw UnsupportedForm("unsupported form: " + shape +
                          " (fractions must reduce to (A*Z + B)/(Z + C))");
}

} // namespace

ClassifiedProblem classify_problem(const SourceExpr& e) {
    if (e.parts.size() == 1) return classify_one(e.parts[0]);
    if (e.parts.size() != 2) throw UnsupportedForm("expected one inequality or two joined by '&&'");
    auto first = classify_one(e.parts[0]);
    auto second = classify_one(e.parts[1]);
    const auto* l1 = std::get_if<Linear>(&first.problem);
    const auto* l2 = std::get_if<Linear>(&second.problem);
    if (!l1 || !l2)
        throw UnsupportedForm("unsupported form: systems must join two linear inequalities (got " +
                              first.shape + " and " + second.shape + ")");
    return {LinearSystem{l1->a, l1->b, l2->a, l2->b}, {1.0, 0.0}, "system of two linear inequalities"};
}

} // namespace lexineq
