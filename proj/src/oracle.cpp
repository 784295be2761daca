#include "lexineq/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <string>

namespace lexineq {

PoleAt::PoleAt(Complex z) : std::domain_error("expression has a pole at the probe point"), point(z) {}

namespace {

constexpr Complex kZero{0.0, 0.0};

struct Lhs {
    Complex z;
    std::vector<Complex> operator()(const Linear& p) const { return {p.a * z - p.b}; }
    std::vector<Complex> operator()(const LinearSystem& p) const { return {p.a * z - p.b, p.c * z - p.d}; }
    std::vector<Complex> operator()(const Fractional& p) const {
        const Complex den = z + p.c;
        if (den.is_zero()) throw PoleAt(z);
        return {(p.a * z + p.b) / den - p.d};
    }
    std::vector<Complex> operator()(const Quadratic& p) const { return {p.a * (z * z) + p.b * z + p.c}; }
};

double margin_of(Complex v, double eps) {
    const double re = std::abs(v.re);
    return re > eps ? re : std::abs(v.im);
}

// Probes whose real part is within eps of zero sit on the band around the
// line Re v = 0. The imaginary tiebreak there is only reached when a path
// computes Re v as exactly zero, which two different paths rarely agree on.
bool near_decision_line(const InequalityProblem& p, Complex z, double eps) {
    for (const auto& v : evaluate_lhs(p, z))
        if (std::abs(v.re) <= eps || margin_of(v, eps) < eps) return true;
    return false;
}

template <typename Fn>
Bitmap raster(const GridSpec& g, Fn&& membership) {
    Bitmap b{g, {}};
    b.cells.reserve(g.size());
    for (std::size_t row = 0; row < g.ny; ++row)
        for (std::size_t col = 0; col < g.nx; ++col) b.cells.push_back(membership(g.point(col, row)));
    return b;
}

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

} // namespace

std::vector<Complex> evaluate_lhs(const InequalityProblem& p, Complex z) { return std::visit(Lhs{z}, p); }

Membership eval_direct(const InequalityProblem& p, Complex z) {
    std::vector<Complex> values;
    try {
        values = evaluate_lhs(p, z);
    } catch (const PoleAt&) {
        return Membership::Pole;
    }
    for (const auto& v : values)
        if (!lex_ge(v, kZero)) return Membership::Out;
    return Membership::In;
}

double boundary_margin(const InequalityProblem& p, Complex z, double eps) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& v : evaluate_lhs(p, z)) m = std::min(m, margin_of(v, eps));
    return m;
}

GridSpec::GridSpec(double re0, double re1, double im0, double im1, std::size_t cols, std::size_t rows)
    : re_min(re0), re_max(re1), im_min(im0), im_max(im1), nx(cols), ny(rows) {
    if (!(re0 < re1) || !(im0 < im1)) throw std::invalid_argument("grid window must have min < max");
    if (cols < 2 || rows < 2) throw std::invalid_argument("grid needs at least 2 samples per axis");
}

// Endpoint-inclusive interpolation; the midpoint of a symmetric window with an
// odd count is exactly zero.
double GridSpec::re_at(std::size_t col) const {
    const double n = static_cast<double>(nx - 1);
    const double i = static_cast<double>(col);
    return ((n - i) * re_min + i * re_max) / n;
}

double GridSpec::im_at(std::size_t row) const {
    const double n = static_cast<double>(ny - 1);
    const double j = static_cast<double>(row);
    return ((n - j) * im_max + j * im_min) / n;
}

Complex GridSpec::point(std::size_t col, std::size_t row) const { return {re_at(col), im_at(row)}; }

VerificationReport verify(const InequalityProblem& p, const SolutionSet& s, const GridSpec& g, double eps) {
    VerificationReport rep;
    for (std::size_t row = 0; row < g.ny; ++row) {
        for (std::size_t col = 0; col < g.nx; ++col) {
            const Complex z = g.point(col, row);
            ++rep.total;
            const Membership direct = eval_direct(p, z);
            const Membership region = contains(s, z);
            if (direct == Membership::Pole) {
                ++rep.skipped_pole;
                if (region != Membership::Pole) rep.mismatches.push_back({row * g.nx + col, z, direct, region});
                continue;
            }
            if (near_decision_line(p, z, eps)) {
                ++rep.skipped_boundary;
                continue;
            }
            if (direct != region) rep.mismatches.push_back({row * g.nx + col, z, direct, region});
        }
    }
    rep.passed = rep.mismatches.empty();
    return rep;
}

std::size_t Bitmap::count(Membership m) const { return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), m)); }

Bitmap sample_raster(const Region& r, const GridSpec& g) {
    return raster(g, [&](Complex z) { return contains(r, z); });
}

Bitmap sample_raster(const SolutionSet& s, const GridSpec& g) {
    return raster(g, [&](Complex z) { return contains(s, z); });
}

Bitmap sample_raster(const InequalityProblem& p, const GridSpec& g) {
    return raster(g, [&](Complex z) { return eval_direct(p, z); });
}

void write_pgm(std::ostream& os, const Bitmap& b) {
    os << "P2\n" << b.grid.nx << ' ' << b.grid.ny << "\n2\n";
    for (std::size_t row = 0; row < b.grid.ny; ++row) {
        for (std::size_t col = 0; col < b.grid.nx; ++col) {
            if (col) os << ' ';
            switch (b.at(col, row)) {
            case Membership::Out: os << '0'; break;
            case Membership::Pole: os << '1'; break;
            case Membership::In: os << '2'; break;
            }
        }
        os << '\n';
    }
}

void write_csv(std::ostream& os, const Bitmap& b) {
    os << "re,im,state\n";
    for (std::size_t row = 0; row < b.grid.ny; ++row)
        for (std::size_t col = 0; col < b.grid.nx; ++col)
            os << shortest(b.grid.re_at(col)) << ',' << shortest(b.grid.im_at(row)) << ','
               << to_string(b.at(col, row)) << '\n';
}

} // namespace lexineq
