#include "lexineq/serialize.hpp"

namespace lexineq {

using nlohmann::json;

json to_json(Complex z) { return {{"re", z.re}, {"im", z.im}}; }

json to_json(const Transform& t) {
    struct V {
        json operator()(const Rotate& x) const { return {{"kind", "rotate"}, {"theta", x.theta}}; }
        json operator()(const Scale& x) const { return {{"kind", "scale"}, {"r", x.r}}; }
        json operator()(const Translate& x) const {
            return {{"kind", "translate"}, {"re", x.offset.re}, {"im", x.offset.im}};
        }
        json operator()(const Invert&) const { return {{"kind", "invert"}}; }
        json operator()(const Sqrt&) const { return {{"kind", "sqrt"}}; }
    };
    return std::visit(V{}, t);
}

json to_json(const Region& r) {
    json chain = json::array();
    for (const auto& t : r.transforms()) chain.push_back(to_json(t));
    return {{"base", to_json(r.anchor())}, {"transforms", std::move(chain)}};
}

json to_json(const RegionClassification& c) {
    struct V {
        json operator()(const VerticalHalfPlane& k) const { return {{"boundary_re", k.boundary_re}}; }
        json operator()(const ObliqueHalfPlane& k) const {
            return {{"normal_angle", k.normal_angle}, {"offset", k.offset}};
        }
        json operator()(const Disc& k) const { return {{"center", to_json(k.center)}, {"radius", k.radius}}; }
        json operator()(const HyperbolaDomain& k) const {
            return {{"a1", k.a1},
                    {"connected", k.connected},
                    {"contains_origin", k.contains_origin},
                    {"center", to_json(k.center)}};
        }
        json operator()(const Generic&) const { return json::object(); }
    };
    json j = std::visit(V{}, c.kind);
    j["kind"] = kind_name(c);
    j["boundary_note"] = c.boundary_note;
    return j;
}

json to_json(const InequalityProblem& p) {
    struct V {
        json operator()(const Linear& q) const { return {{"A", to_json(q.a)}, {"B", to_json(q.b)}}; }
        json operator()(const LinearSystem& q) const {
            return {{"A", to_json(q.a)}, {"B", to_json(q.b)}, {"C", to_json(q.c)}, {"D", to_json(q.d)}};
        }
        json operator()(const Fractional& q) const {
            return {{"A", to_json(q.a)}, {"B", to_json(q.b)}, {"C", to_json(q.c)}, {"D", to_json(q.d)}};
        }
        json operator()(const Quadratic& q) const {
            return {{"A", to_json(q.a)}, {"B", to_json(q.b)}, {"C", to_json(q.c)}};
        }
    };
    json j = std::visit(V{}, p);
    j["kind"] = problem_kind(p);
    return j;
}

json to_json(const SolutionSet& s) {
    json regions = json::array();
    for (const auto& r : s.regions) regions.push_back(to_json(r));
    json excluded = json::array();
    for (const auto& z : s.excluded_points) excluded.push_back(to_json(z));
    json j = {{"kind", to_string(s.kind)}, {"regions", std::move(regions)}, {"excluded_points", std::move(excluded)}};
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

json to_json(const LawReport& r) {
    json j = {{"law", std::string(law_name(r.law))},
              {"expected", is_order_law(r.law) ? "law" : "non-law"},
              {"samples", r.samples},
              {"seed", r.seed},
              {"outcome", r.outcome == LawOutcome::Pass ? "pass" : "counterexample"},
              {"as_expected", r.as_expected()}};
    if (r.witness) {
        json w = json::array();
        for (const auto& z : *r.witness) w.push_back(to_json(z));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const VerificationReport& r) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"index", m.index},
                              {"point", to_json(m.point)},
                              {"oracle", to_string(m.oracle)},
                              {"region", to_string(m.region)}});
    return {{"total", r.total},
            {"skipped_boundary", r.skipped_boundary},
            {"skipped_pole", r.skipped_pole},
            {"mismatches", std::move(mismatches)},
            {"passed", r.passed}};
}

Complex complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Transform transform_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rotate") return Rotate(j.at("theta").get<double>());
    if (kind == "scale") return Scale(j.at("r").get<double>());
    if (kind == "translate") return Translate(complex_from_json(j));
    if (kind == "invert") return Invert{};
    if (kind == "sqrt") return Sqrt{};
    throw std::invalid_argument("unknown transform kind: " + kind);
}

Region region_from_json(const json& j) {
    std::vector<Transform> chain;
    for (const auto& t : j.at("transforms")) chain.push_back(transform_from_json(t));
    return Region(complex_from_json(j.at("base")), std::move(chain));
}

} // namespace lexineq
