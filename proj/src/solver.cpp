#include "lexineq/solver.hpp"

namespace lexineq {

std::string problem_kind(const InequalityProblem& p) {
    struct V {
        std::string operator()(const Linear&) const { return "linear"; }
        std::string operator()(const LinearSystem&) const { return "linear_system"; }
        std::string operator()(const Fractional&) const { return "fractional"; }
        std::string operator()(const Quadratic&) const { return "quadratic"; }
    };
    return std::visit(V{}, p);
}

const char* to_string(SolutionSet::Kind k) {
    switch (k) {
    case SolutionSet::Kind::Single: return "single";
    case SolutionSet::Kind::Intersection: return "intersection";
    case SolutionSet::Kind::All: return "all";
    case SolutionSet::Kind::Empty: return "empty";
    }
    return "?";
}

Membership contains(const SolutionSet& s, Complex z) {
    for (const auto& p : s.excluded_points)
        if (p == z) return Membership::Pole;
    switch (s.kind) {
    case SolutionSet::Kind::All: return Membership::In;
    case SolutionSet::Kind::Empty: return Membership::Out;
    default: break;
    }
    Membership acc = Membership::In;
    for (const auto& r : s.regions) {
        const auto m = contains(r, z);
        if (m == Membership::Pole) return Membership::Pole;
        if (m == Membership::Out) acc = Membership::Out;
    }
    return acc;
}

namespace {

// Identity rotations and zero translations are left out of emitted chains.
SolutionSet single(Region r) {
    SolutionSet s;
    s.kind = SolutionSet::Kind::Single;
    s.regions.push_back(std::move(r));
    return s;
}

SolutionSet constant(bool holds, std::string note) {
    SolutionSet s;
    s.kind = holds ? SolutionSet::Kind::All : SolutionSet::Kind::Empty;
    s.note = std::move(note);
    return s;
}

} // namespace

SolutionSet solve_linear(Complex a, Complex b) {
    if (a.is_zero()) return constant(lex_ge(Complex{0.0, 0.0}, b), "A = 0: constant inequality 0 >= B");
    // A = r e^{i theta}:  A Z >= B  <=>  e^{i theta} Z >= B/r  <=>  Z in e^{-i theta} D(B/r)
    const Polar p = polar_decompose(a);
    Region r(scale(b, 1.0 / p.r));
    if (p.theta != 0.0) r = apply_transform(r, Rotate(-p.theta));
    return single(std::move(r));
}

SolutionSet solve_linear_system(Complex a, Complex b, Complex c, Complex d) {
    const SolutionSet first = solve_linear(a, b);
    const SolutionSet second = solve_linear(c, d);
    using K = SolutionSet::Kind;
    if (first.kind == K::Empty) return first;
    if (second.kind == K::Empty) return second;
    if (first.kind == K::All) return second;
    if (second.kind == K::All) return first;
    SolutionSet s;
    s.kind = K::Intersection;
    s.regions = {first.regions.front(), second.regions.front()};
    return s;
}

SolutionSet solve_fractional(Complex a, Complex b, Complex c, Complex d, bool strict) {
    const Complex k = b - a * c;
    const Complex pole = Complex{} - c;
    if (k.is_zero()) {
        if (strict) throw DegenerateFraction();
        // (A Z + B)/(Z + C) = A away from the pole
        SolutionSet s = constant(lex_ge(a, d), "B - A*C = 0: expression equals A except at the pole");
        s.excluded_points.push_back(pole);
        return s;
    }
    // B - A C = r e^{i theta}:  S = e^{i theta} / D((D - A)/r) - C
    const Polar p = polar_decompose(k);
    Region r(scale(d - a, 1.0 / p.r));
    r = apply_transform(r, Invert{});
    if (p.theta != 0.0) r = apply_transform(r, Rotate(p.theta));
    if (!pole.is_zero()) r = apply_transform(r, Translate(pole));
    SolutionSet s = single(std::move(r));
    s.excluded_points.push_back(pole);
    return s;
}

SolutionSet solve_quadratic(Complex a, Complex b, Complex c) {
    if (a.is_zero()) throw ZeroLeadingCoefficient();
    // A = r e^{i theta}:  S = e^{-i theta/2} D((B^2 - 4AC)/(4 r A))^{1/2} - B/(2A)
    const Polar p = polar_decompose(a);
    const Complex disc = b * b - Complex{4.0, 0.0} * a * c;
    const Complex anchor = disc / (Complex{4.0 * p.r, 0.0} * a);
    const Complex shift = b / (Complex{2.0, 0.0} * a);
    Region r(anchor);
    r = apply_transform(r, Sqrt{});
    if (p.theta != 0.0) r = apply_transform(r, Rotate(-p.theta / 2.0));
    if (!shift.is_zero()) r = apply_transform(r, Translate(Complex{} - shift));
    return single(std::move(r));
}

SolutionSet solve(const InequalityProblem& p, bool strict) {
    struct V {
        bool strict;
        SolutionSet operator()(const Linear& q) const { return solve_linear(q.a, q.b); }
        SolutionSet operator()(const LinearSystem& q) const { return solve_linear_system(q.a, q.b, q.c, q.d); }
        SolutionSet operator()(const Fractional& q) const { return solve_fractional(q.a, q.b, q.c, q.d, strict); }
        SolutionSet operator()(const Quadratic& q) const { return solve_quadratic(q.a, q.b, q.c); }
    };
    return std::visit(V{strict}, p);
}

} // namespace lexineq
