#include "lexineq/lexorder.hpp"

#include <array>
#include <bit>
#include <random>

namespace lexineq {

const char* to_string(LexOrdering o) {
    switch (o) {
    case LexOrdering::Less: return "less";
    case LexOrdering::Equal: return "equal";
    case LexOrdering::Greater: return "greater";
    }
    return "?";
}

namespace {

struct LawInfo {
    LawId id;
    std::string_view name;
    std::size_t arity;  // tuple length, scalars included
    bool order_law;
};

constexpr std::array<LawInfo, 10> kLaws = {{
    {LawId::Reflexivity, "Reflexivity", 1, true},
    {LawId::Antisymmetry, "Antisymmetry", 2, true},
    {LawId::Transitivity, "Transitivity", 3, true},
    {LawId::Totality, "Totality", 2, true},
    {LawId::TranslationInvariance, "TranslationInvariance", 3, true},
    {LawId::TermMoving, "TermMoving", 3, true},
    {LawId::Additivity, "Additivity", 4, true},
    {LawId::PositiveScaling, "PositiveScaling", 3, true},
    {LawId::NegativeScalingReversal, "NegativeScalingReversal", 3, true},
    {LawId::ComplexScalarMonotonicity, "ComplexScalarMonotonicity", 3, false},
}};

const LawInfo& info(LawId id) {
    for (const auto& l : kLaws)
        if (l.id == id) return l;
    throw UnknownLaw(std::to_string(static_cast<int>(id)));
}

bool has_real_scalar(LawId id) {
    return id == LawId::PositiveScaling || id == LawId::NegativeScalingReversal;
}

// mt19937_64 is fully specified by the standard; only its raw output is used
// so results do not depend on the library's distribution implementations.
class Sampler {
public:
    Sampler(std::uint64_t seed, bool full_range) : gen_(seed), full_range_(full_range) {}

    std::uint64_t next() { return gen_(); }

    double coord() {
        if (full_range_) {
            // uniform in [-1e6, 1e6) with all 53 mantissa bits populated
            const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
            return (u * 2.0 - 1.0) * 1e6;
        }
        return static_cast<double>(static_cast<int>(next() % 129) - 64) / 8.0;
    }

    double positive_scalar() {
        if (full_range_) return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53 * 1e3;
        return static_cast<double>(next() % 64 + 1) / 8.0;
    }

    Complex fresh() { return {coord(), coord()}; }

    // Later tuple members sometimes share coordinates with the previous one so
    // the tie branches of the order are exercised.
    Complex related(Complex prev) {
        switch (next() % 8) {
        case 0: return prev;
        case 1:
        case 2: return {prev.re, coord()};
        default: return fresh();
        }
    }

private:
    std::mt19937_64 gen_;
    bool full_range_;
};

std::vector<Complex> draw_tuple(LawId id, Sampler& s) {
    const auto& l = info(id);
    std::vector<Complex> t;
    t.reserve(l.arity);
    t.push_back(s.fresh());
    const std::size_t complex_count = has_real_scalar(id) ? l.arity - 1 : l.arity;
    while (t.size() < complex_count) t.push_back(s.related(t.back()));
    if (id == LawId::PositiveScaling) t.emplace_back(s.positive_scalar(), 0.0);
    if (id == LawId::NegativeScalingReversal) t.emplace_back(-s.positive_scalar(), 0.0);
    return t;
}

// Greedy shrink: try simpler values coordinate by coordinate while the
// tuple keeps violating the law.
std::vector<Complex> shrink(LawId id, std::vector<Complex> t) {
    auto candidates = [](double v) {
        std::vector<double> c{0.0};
        if (v != std::trunc(v)) c.push_back(std::trunc(v));
        if (std::abs(v) > 1.0) c.push_back(v > 0 ? 1.0 : -1.0);
        return c;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& z : t) {
            for (double* coord : {&z.re, &z.im}) {
                for (double c : candidates(*coord)) {
                    if (c == *coord) continue;
                    const double old = *coord;
                    *coord = c;
                    if (!law_holds(id, t)) {
                        changed = true;
                        break;
                    }
                    *coord = old;
                }
            }
        }
    }
    return t;
}

LawReport run_law(LawId id, std::uint64_t samples, std::uint64_t seed, bool full_range) {
    LawReport rep;
    rep.law = id;
    rep.samples = samples;
    rep.seed = seed;
    Sampler s(seed, full_range);
    for (std::uint64_t n = 0; n < samples; ++n) {
        auto t = draw_tuple(id, s);
        if (!law_holds(id, t)) {
            rep.outcome = LawOutcome::Counterexample;
            rep.witness = shrink(id, std::move(t));
            return rep;
        }
    }
    return rep;
}

} // namespace

const std::vector<LawId>& all_laws() {
    static const std::vector<LawId> ids = [] {
        std::vector<LawId> v;
        for (const auto& l : kLaws) v.push_back(l.id);
        return v;
    }();
    return ids;
}

std::string_view law_name(LawId id) { return info(id).name; }

LawId law_from_name(std::string_view name) {
    for (const auto& l : kLaws)
        if (l.name == name) return l.id;
    throw UnknownLaw(std::string(name));
}

bool is_order_law(LawId id) { return info(id).order_law; }

bool LawReport::as_expected() const {
    return is_order_law(law) ? outcome == LawOutcome::Pass
                             : outcome == LawOutcome::Counterexample && witness.has_value();
}

bool law_holds(LawId id, const std::vector<Complex>& t) {
    if (t.size() != info(id).arity) throw std::invalid_argument("law tuple has wrong arity");
    switch (id) {
    case LawId::Reflexivity:
        return lex_cmp(t[0], t[0]) == LexOrdering::Equal;
    case LawId::Antisymmetry:
        return (lex_le(t[0], t[1]) && lex_ge(t[0], t[1])) == (t[0] == t[1]);
    case LawId::Transitivity:
        return !(lex_le(t[0], t[1]) && lex_le(t[1], t[2])) || lex_le(t[0], t[2]);
    case LawId::Totality: {
        const auto ab = lex_cmp(t[0], t[1]);
        const auto ba = lex_cmp(t[1], t[0]);
        return (lex_le(t[0], t[1]) || lex_ge(t[0], t[1])) && ba == reversed(ab);
    }
    case LawId::TranslationInvariance:
        return lex_cmp(t[0], t[1]) == lex_cmp(t[0] + t[2], t[1] + t[2]);
    case LawId::TermMoving:
        return lex_le(t[0] + t[1], t[2]) == lex_le(t[0], t[2] - t[1]);
    case LawId::Additivity:
        return !(lex_le(t[0], t[1]) && lex_le(t[2], t[3])) || lex_le(t[0] + t[2], t[1] + t[3]);
    case LawId::PositiveScaling: {
        const double r = t[2].re;
        if (!(r > 0.0) || t[2].im != 0.0) return true;
        return lex_cmp(t[0], t[1]) == lex_cmp(scale(t[0], r), scale(t[1], r));
    }
    case LawId::NegativeScalingReversal: {
        const double r = t[2].re;
        if (!(r < 0.0) || t[2].im != 0.0) return true;
        return reversed(lex_cmp(t[0], t[1])) == lex_cmp(scale(t[0], r), scale(t[1], r));
    }
    case LawId::ComplexScalarMonotonicity:
        return !lex_le(t[0], t[1]) || lex_le(t[0] * t[2], t[1] * t[2]);
    }
    throw UnknownLaw(std::to_string(static_cast<int>(id)));
}

LawReport check_law(LawId id, std::uint64_t samples, std::uint64_t seed) {
    return run_law(id, samples, seed, false);
}

LawReport check_law_full_range(LawId id, std::uint64_t samples, std::uint64_t seed) {
    return run_law(id, samples, seed, true);
}

} // namespace lexineq
