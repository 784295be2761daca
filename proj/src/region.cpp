#include "lexineq/region.hpp"

#include <optional>
#include <sstream>

namespace lexineq {

const char* to_string(Membership m) {
    switch (m) {
    case Membership::In: return "in";
    case Membership::Out: return "out";
    case Membership::Pole: return "pole";
    }
    return "?";
}

Scale::Scale(double factor) : r(factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw NonPositiveScale(factor);
}

Region::Region(Complex anchor, std::vector<Transform> chain)
    : anchor_(anchor), chain_(std::move(chain)) {}

Region apply_transform(const Region& r, const Transform& t) {
    auto chain = r.transforms();
    chain.push_back(t);
    return Region(r.anchor(), std::move(chain));
}

namespace {

struct Pullback {
    Complex operator()(const Rotate& t, Complex w) const { return w * conj(unit_phasor(t.theta)); }
    Complex operator()(const Scale& t, Complex w) const { return {w.re / t.r, w.im / t.r}; }
    Complex operator()(const Translate& t, Complex w) const { return w - t.offset; }
    Complex operator()(const Invert&, Complex w) const { return complex_div(Complex{1.0, 0.0}, w); }
    Complex operator()(const Sqrt&, Complex w) const { return complex_square(w); }
};

} // namespace

Membership contains(const Region& r, Complex w) {
    const auto& chain = r.transforms();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (std::holds_alternative<Invert>(*it) && w.is_zero()) return Membership::Pole;
        w = std::visit([&](const auto& t) { return Pullback{}(t, w); }, *it);
    }
    return lex_ge(w, r.anchor()) ? Membership::In : Membership::Out;
}

Region normalize(const Region& r) {
    std::vector<Transform> out;
    for (const auto& t : r.transforms()) {
        if (!out.empty()) {
            auto& last = out.back();
            if (auto* a = std::get_if<Rotate>(&last); a && std::holds_alternative<Rotate>(t)) {
                last = Rotate(a->theta + std::get<Rotate>(t).theta);
                if (std::get<Rotate>(last).theta == 0.0) out.pop_back();
                continue;
            }
            if (auto* a = std::get_if<Scale>(&last); a && std::holds_alternative<Scale>(t)) {
                last = Scale(a->r * std::get<Scale>(t).r);
                if (std::get<Scale>(last).r == 1.0) out.pop_back();
                continue;
            }
            if (auto* a = std::get_if<Translate>(&last); a && std::holds_alternative<Translate>(t)) {
                last = Translate(a->offset + std::get<Translate>(t).offset);
                if (std::get<Translate>(last).offset.is_zero()) out.pop_back();
                continue;
            }
        }
        if (auto* a = std::get_if<Rotate>(&t); a && a->theta == 0.0) continue;
        if (auto* a = std::get_if<Scale>(&t); a && a->r == 1.0) continue;
        if (auto* a = std::get_if<Translate>(&t); a && a->offset.is_zero()) continue;
        out.push_back(t);
    }
    return Region(r.anchor(), std::move(out));
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(6);
    os << v;
    return os.str();
}

// Follows a point through trailing Rotate/Scale/Translate transforms.
// Returns nullopt when a transform outside `allow_scale` appears.
struct Similarity {
    Complex image;
    double factor = 1.0;
};

std::optional<Similarity> push_forward(const std::vector<Transform>& chain, std::size_t from,
                                       Complex point, bool allow_scale) {
    Similarity s{point, 1.0};
    for (std::size_t i = from; i < chain.size(); ++i) {
        const auto& t = chain[i];
        if (const auto* rot = std::get_if<Rotate>(&t)) {
            s.image = s.image * unit_phasor(rot->theta);
        } else if (const auto* sc = std::get_if<Scale>(&t); sc && allow_scale) {
            s.image = scale(s.image, sc->r);
            s.factor *= sc->r;
        } else if (const auto* tr = std::get_if<Translate>(&t)) {
            s.image = s.image + tr->offset;
        } else {
            return std::nullopt;
        }
    }
    return s;
}

} // namespace

RegionClassification classify(const Region& r) {
    const auto& chain = r.transforms();
    const double a1 = r.anchor().re;
    const double a2 = r.anchor().im;

    if (chain.empty()) {
        return {VerticalHalfPlane{a1}, "open half-plane Re Z > " + fmt(a1) +
                                           " plus the boundary half-line Im Z >= " + fmt(a2)};
    }
    if (chain.size() == 1) {
        if (const auto* rot = std::get_if<Rotate>(&chain[0])) {
            return {ObliqueHalfPlane{rot->theta, a1},
                    "open half-plane z1 cos t + z2 sin t > " + fmt(a1) +
                        " plus the boundary half-line z2 cos t - z1 sin t >= " + fmt(a2)};
        }
    }
    if (std::holds_alternative<Invert>(chain[0]) && a1 > 0.0) {
        const double rad = 1.0 / (2.0 * a1);
        if (auto s = push_forward(chain, 1, Complex{rad, 0.0}, true)) {
            return {Disc{s->image, rad * s->factor},
                    "open disc plus the boundary arc where the imaginary condition holds; "
                    "the image of the origin is excluded"};
        }
    }
    if (std::holds_alternative<Sqrt>(chain[0])) {
        if (auto s = push_forward(chain, 1, Complex{0.0, 0.0}, false)) {
            const bool origin_in = contains(r, Complex{0.0, 0.0}) == Membership::In;
            const bool connected = a1 <= 0.0;
            std::string note = "hyperbola z1^2 - z2^2 = " + fmt(a1) + "; ";
            note += a1 > 0.0 ? "two branches away from the center"
                             : (a1 < 0.0 ? "one connected part around the center"
                                         : "asymptote cross splits the plane into four parts");
            note += "; boundary points included where 2 z1 z2 >= " + fmt(a2);
            return {HyperbolaDomain{a1, connected, origin_in, s->image}, note};
        }
    }
    return {Generic{}, "no closed-form shape; membership is pointwise"};
}

std::string kind_name(const RegionClassification& c) {
    struct V {
        std::string operator()(const VerticalHalfPlane&) const { return "vertical_half_plane"; }
        std::string operator()(const ObliqueHalfPlane&) const { return "oblique_half_plane"; }
        std::string operator()(const Disc&) const { return "disc"; }
        std::string operator()(const HyperbolaDomain&) const { return "hyperbola_domain"; }
        std::string operator()(const Generic&) const { return "generic"; }
    };
    return std::visit(V{}, c.kind);
}

} // namespace lexineq
