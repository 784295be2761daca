#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "lexineq/complex.hpp"
#include "lexineq/region.hpp"
#include "lexineq/solver.hpp"

namespace lexineq {

// Direct evaluation of inequalities. Uses only complex arithmetic and the
// lexicographic order; nothing here depends on the region or solver logic.

struct PoleAt : std::domain_error {
    explicit PoleAt(Complex z);
    Complex point;
};

inline constexpr double kDefaultEps = 1e-6;

Membership eval_direct(const InequalityProblem& p, Complex z);

/// Left-hand values f(Z) - g(Z); one entry, or two for a linear system.
/// Throws PoleAt where the expression is undefined.
std::vector<Complex> evaluate_lhs(const InequalityProblem& p, Complex z);

/// |Re v| when it exceeds eps, otherwise |Im v|, for v the left-hand value.
/// The minimum over both constraints of a system.
double boundary_margin(const InequalityProblem& p, Complex z, double eps = kDefaultEps);

struct GridSpec {
    double re_min = -5.0, re_max = 5.0;
    double im_min = -5.0, im_max = 5.0;
    std::size_t nx = 201, ny = 201;

    GridSpec() = default;
    GridSpec(double re0, double re1, double im0, double im1, std::size_t cols, std::size_t rows);

    /// Row 0 is the top of the window (im_max); rows run downward.
    Complex point(std::size_t col, std::size_t row) const;
    double re_at(std::size_t col) const;
    double im_at(std::size_t row) const;
    std::size_t size() const { return nx * ny; }
};

struct Mismatch {
    std::size_t index;  // row * nx + col
    Complex point;
    Membership oracle;
    Membership region;
};

struct VerificationReport {
    std::size_t total = 0;
    std::size_t skipped_boundary = 0;
    std::size_t skipped_pole = 0;
    std::vector<Mismatch> mismatches;
    bool passed = true;
};

/// Compares solver membership against direct evaluation at every grid point
/// whose boundary margin is at least eps and whose left-hand value has
/// |Re v| > eps. Pole probes are skipped but must also be poles of the
/// solution.
VerificationReport verify(const InequalityProblem& p, const SolutionSet& s, const GridSpec& g,
                          double eps = kDefaultEps);

struct Bitmap {
    GridSpec grid;
    std::vector<Membership> cells;  // row-major, grid.size() entries

    Membership at(std::size_t col, std::size_t row) const { return cells[row * grid.nx + col]; }
    std::size_t count(Membership m) const;
};

Bitmap sample_raster(const Region& r, const GridSpec& g);
Bitmap sample_raster(const SolutionSet& s, const GridSpec& g);
Bitmap sample_raster(const InequalityProblem& p, const GridSpec& g);

/// Plain PGM ("P2"), 0 = out, 1 = pole, 2 = in, one raster row per line.
void write_pgm(std::ostream& os, const Bitmap& b);
/// CSV with header re,im,state; state is in|out|pole.
void write_csv(std::ostream& os, const Bitmap& b);

} // namespace lexineq
