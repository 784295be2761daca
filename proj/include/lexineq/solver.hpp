#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lexineq/complex.hpp"
#include "lexineq/region.hpp"

namespace lexineq {

/// A*Z - B >= 0
struct Linear {
    Complex a, b;
    bool operator==(const Linear&) const = default;
};
/// A*Z - B >= 0 and C*Z - D >= 0
struct LinearSystem {
    Complex a, b, c, d;
    bool operator==(const LinearSystem&) const = default;
};
/// (A*Z + B)/(Z + C) >= D
struct Fractional {
    Complex a, b, c, d;
    bool operator==(const Fractional&) const = default;
};
/// A*Z^2 + B*Z + C >= 0
struct Quadratic {
    Complex a, b, c;
    bool operator==(const Quadratic&) const = default;
};

using InequalityProblem = std::variant<Linear, LinearSystem, Fractional, Quadratic>;

std::string problem_kind(const InequalityProblem& p);

struct SolutionSet {
    enum class Kind { Single, Intersection, All, Empty };

    Kind kind = Kind::Empty;
    std::vector<Region> regions;          // one for Single, two for Intersection
    std::vector<Complex> excluded_points; // poles (fractional only)
    std::string note;                     // diagnostics for degenerate inputs
};

const char* to_string(SolutionSet::Kind k);

/// Membership in a solution set: excluded points are Pole, intersections
/// are conjunctions (Pole if any member is Pole).
Membership contains(const SolutionSet& s, Complex z);

struct DegenerateFraction : std::domain_error {
    DegenerateFraction() : std::domain_error("degenerate fraction: B - A*C = 0") {}
};
struct ZeroLeadingCoefficient : std::domain_error {
    ZeroLeadingCoefficient() : std::domain_error("quadratic with A = 0; use the linear solver") {}
};

SolutionSet solve_linear(Complex a, Complex b);
SolutionSet solve_linear_system(Complex a, Complex b, Complex c, Complex d);
/// With strict = false, B - A*C = 0 yields the constant answer (All or Empty
/// depending on A >= D) with the pole still excluded.
SolutionSet solve_fractional(Complex a, Complex b, Complex c, Complex d, bool strict = false);
SolutionSet solve_quadratic(Complex a, Complex b, Complex c);

SolutionSet solve(const InequalityProblem& p, bool strict = false);

} // namespace lexineq
