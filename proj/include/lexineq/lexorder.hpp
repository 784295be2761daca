#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lexineq/complex.hpp"

namespace lexineq {

enum class LexOrdering { Less, Equal, Greater };

/// Dictionary order on C: real parts first, imaginary parts on ties.
/// Coordinates are compared exactly.
constexpr LexOrdering lex_cmp(Complex a, Complex b) {
    if (a.re < b.re) return LexOrdering::Less;
    if (a.re > b.re) return LexOrdering::Greater;
    if (a.im < b.im) return LexOrdering::Less;
    if (a.im > b.im) return LexOrdering::Greater;
    return LexOrdering::Equal;
}

constexpr bool lex_le(Complex a, Complex b) { return lex_cmp(a, b) != LexOrdering::Greater; }
constexpr bool lex_ge(Complex a, Complex b) { return lex_cmp(a, b) != LexOrdering::Less; }

constexpr LexOrdering reversed(LexOrdering o) {
    switch (o) {
    case LexOrdering::Less: return LexOrdering::Greater;
    case LexOrdering::Greater: return LexOrdering::Less;
    default: return LexOrdering::Equal;
    }
}

const char* to_string(LexOrdering o);

// ---------------------------------------------------------------------------
// Randomized law checking

enum class LawId {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Totality,
    TranslationInvariance,
    TermMoving,
    Additivity,
    PositiveScaling,
    NegativeScalingReversal,
    ComplexScalarMonotonicity,
};

struct UnknownLaw : std::invalid_argument {
    explicit UnknownLaw(const std::string& name) : std::invalid_argument("unknown law: " + name) {}
};

const std::vector<LawId>& all_laws();
std::string_view law_name(LawId id);
LawId law_from_name(std::string_view name);  // throws UnknownLaw
/// False for the registered non-laws, which are expected to be falsified.
bool is_order_law(LawId id);

enum class LawOutcome { Pass, Counterexample };

struct LawReport {
    LawId law{};
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    LawOutcome outcome = LawOutcome::Pass;
    /// Present iff outcome is Counterexample. Real scalars of the scaling laws
    /// are carried as r + 0i.
    std::optional<std::vector<Complex>> witness;

    /// A law holds as expected, or a non-law was falsified.
    bool as_expected() const;
};

/// Evaluates a law on one concrete tuple; true when the law holds there.
/// The tuple layout is the one used for witnesses.
bool law_holds(LawId id, const std::vector<Complex>& tuple);

/// Draws `samples` tuples from a dyadic generator (coordinates k/8,
/// |k| <= 64) seeded with `seed`. Counterexamples are shrunk greedily
/// toward small integers before being reported.
LawReport check_law(LawId id, std::uint64_t samples, std::uint64_t seed);

/// Full-range float tuples for exploratory runs. Rounding makes the additive
/// and scaling laws fail here, so this never gates pass/fail.
LawReport check_law_full_range(LawId id, std::uint64_t samples, std::uint64_t seed);

} // namespace lexineq
