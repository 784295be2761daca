#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lexineq/complex.hpp"
#include "lexineq/lexorder.hpp"

namespace lexineq {

enum class Membership { In, Out, Pole };

const char* to_string(Membership m);

struct NonPositiveScale : std::invalid_argument {
    explicit NonPositiveScale(double r)
        : std::invalid_argument("scale factor must be positive, got " + std::to_string(r)) {}
};

// Set transforms. Each one maps a set B to its image; membership in the image
// is decided by pulling the probe point back through the inverse map.

struct Rotate {     // e^{i theta} B
    double theta;   // reduced to (-pi, pi]
    explicit Rotate(double t) : theta(reduce_angle(t)) {}
    bool operator==(const Rotate&) const = default;
};
struct Scale {      // r B, r > 0
    double r;
    explicit Scale(double factor);
    bool operator==(const Scale&) const = default;
};
struct Translate {  // B + offset
    Complex offset;
    explicit Translate(Complex o) : offset(o) {}
    bool operator==(const Translate&) const = default;
};
struct Invert {     // 1/B
    bool operator==(const Invert&) const = default;
};
struct Sqrt {       // B^{1/2} = {W : W^2 in B}
    bool operator==(const Sqrt&) const = default;
};

using Transform = std::variant<Rotate, Scale, Translate, Invert, Sqrt>;

/// A transform chain over the base half-plane D(anchor) = {Z : Z >= anchor}.
/// transforms.front() is applied first; transforms.back() is outermost.
class Region {
public:
    explicit Region(Complex anchor) : anchor_(anchor) {}
    Region(Complex anchor, std::vector<Transform> chain);

    Complex anchor() const { return anchor_; }
    const std::vector<Transform>& transforms() const { return chain_; }

    bool operator==(const Region&) const = default;

private:
    Complex anchor_;
    std::vector<Transform> chain_;
};

Region apply_transform(const Region& r, const Transform& t);

/// Pointwise membership by peeling transforms outermost-first.
Membership contains(const Region& r, Complex w);

/// Drops identity transforms and merges adjacent rotations, scalings and
/// translations. Membership is preserved up to rounding of the merged
/// parameters.
Region normalize(const Region& r);

// ---------------------------------------------------------------------------
// Geometric description

struct VerticalHalfPlane {
    double boundary_re;
};
/// {Z : Re(Z e^{-i normal_angle}) > offset} plus a half-line of the boundary.
struct ObliqueHalfPlane {
    double normal_angle;
    double offset;
};
struct Disc {
    Complex center;
    double radius;
};
struct HyperbolaDomain {
    double a1;
    bool connected;
    bool contains_origin;
    Complex center;  // image of the origin under the trailing transforms
};
struct Generic {};

struct RegionClassification {
    std::variant<VerticalHalfPlane, ObliqueHalfPlane, Disc, HyperbolaDomain, Generic> kind;
    std::string boundary_note;
};

RegionClassification classify(const Region& r);

std::string kind_name(const RegionClassification& c);

} // namespace lexineq
