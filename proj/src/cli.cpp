#include "lexineq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "lexineq/expr.hpp"
#include "lexineq/oracle.hpp"
#include "lexineq/serialize.hpp"

namespace lexineq::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string expr;
    std::string at;
    std::string out_path;
    std::string format = "pgm";
    std::vector<double> window{-5.0, 5.0, -5.0, 5.0};
    std::vector<std::size_t> res{201, 201};
    double eps = kDefaultEps;
    std::uint64_t seed = 42;
    std::uint64_t samples = 10000;
    bool verify = false;
    bool strict = false;
    bool direct = false;
};

GridSpec grid_of(const Options& o) {
    return GridSpec(o.window[0], o.window[1], o.window[2], o.window[3], o.res[0], o.res[1]);
}

// Writes to PATH when given, otherwise to `out`.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

struct Solved {
    SourceExpr source;
    ClassifiedProblem classified;
    SolutionSet solution;
};

Solved solve_text(const std::string& text, bool strict) {
    Solved s{parse(text), {}, {}};
    s.classified = classify_problem(s.source);
    s.solution = solve(s.classified.problem, strict);
    return s;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const Solved s = solve_text(o.expr, o.strict);
    json doc;
    doc["schema"] = kSchema;
    doc["input"] = o.expr;
    doc["parsed"] = to_string(s.source);
    doc["problem"] = to_json(s.classified.problem);
    doc["shape"] = s.classified.shape;
    doc["denominator_scale"] = to_json(s.classified.denominator_scale);
    doc["solution"] = to_json(s.solution);
    json cls = json::array();
    for (const auto& r : s.solution.regions) cls.push_back(to_json(classify(r)));
    doc["classification"] = std::move(cls);
    json excluded = json::array();
    for (const auto& z : s.solution.excluded_points) excluded.push_back(to_json(z));
    doc["excluded_points"] = std::move(excluded);

    int status = 0;
    if (o.verify) {
        const auto g = grid_of(o);
        const auto rep = verify(s.classified.problem, s.solution, g, o.eps);
        json v = to_json(rep);
        v["grid"] = {{"window", o.window}, {"res", o.res}};
        v["eps"] = o.eps;
        doc["verification"] = std::move(v);
        if (!rep.passed) status = 2;
    }
    emit(o.out_path, out, doc.dump(2) + "\n");
    return status;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto at = parse_expression(o.at);
    if (mentions_variable(*at)) throw std::invalid_argument("--at must be a constant, not an expression in Z");
    const Complex z = evaluate(*at, Complex{});
    if (!z.finite()) throw std::invalid_argument("--at is not a finite complex number");
    const Solved s = solve_text(o.expr, o.strict);
    const Membership m = o.direct ? eval_direct(s.classified.problem, z) : contains(s.solution, z);
    out << to_string(m) << '\n';
    return 0;
}

int cmd_raster(const Options& o, std::ostream& out) {
    const Solved s = solve_text(o.expr, o.strict);
    const auto g = grid_of(o);
    const Bitmap b = o.direct ? sample_raster(s.classified.problem, g) : sample_raster(s.solution, g);
    std::ostringstream os;
    if (o.format == "csv") write_csv(os, b);
    else write_pgm(os, b);
    emit(o.out_path, out, os.str());
    return 0;
}

int cmd_laws(const Options& o, std::ostream& out) {
    json arr = json::array();
    bool ok = true;
    for (LawId id : all_laws()) {
        const auto rep = check_law(id, o.samples, o.seed);
        ok = ok && rep.as_expected();
        arr.push_back(to_json(rep));
    }
    emit(o.out_path, out, arr.dump(2) + "\n");
    return ok ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solve inequalities over the complex numbers under the lexicographic order", "lexineq"};
    app.require_subcommand(1);
    Options o;

    auto* solve = app.add_subcommand("solve", "Solve an inequality and print its solution set as JSON");
    solve->add_option("expr", o.expr, "Inequality, e.g. \"1/Z >= 1\"")->required();
    solve->add_flag("--verify", o.verify, "Check the solution against direct evaluation on a grid");
    solve->add_option("--json", o.out_path, "Write the JSON document to a file");

    auto* check = app.add_subcommand("check", "Test whether a point satisfies an inequality");
    check->add_option("expr", o.expr, "Inequality")->required();
    check->add_option("--at", o.at, "Probe point, e.g. 1+2i")->required();
    check->add_flag("--direct", o.direct, "Evaluate the inequality directly instead of the solution set");

    auto* raster = app.add_subcommand("raster", "Sample the solution set on a grid");
    raster->add_option("expr", o.expr, "Inequality")->required();
    raster->add_option("--out", o.out_path, "Output file")->required();
    raster->add_option("--format", o.format, "pgm or csv")->check(CLI::IsMember({"pgm", "csv"}));
    raster->add_flag("--direct", o.direct, "Sample direct evaluation instead of the solution set");

    for (auto* sub : {solve, raster}) {
        sub->add_option("--window", o.window, "re_min,re_max,im_min,im_max")->delimiter(',')->expected(4);
        sub->add_option("--res", o.res, "nx,ny")->delimiter(',')->expected(2);
    }
    for (auto* sub : {solve, check, raster}) {
        sub->add_flag("--strict", o.strict, "Reject degenerate fractions instead of solving them");
    }
    solve->add_option("--eps", o.eps, "Boundary margin below which probes are skipped")
        ->check(CLI::PositiveNumber);

    auto* laws = app.add_subcommand("laws", "Run the randomized order-law checks and print JSON reports");
    laws->add_option("--seed", o.seed, "PRNG seed");
    laws->add_option("--samples", o.samples, "Random trials per law")->check(CLI::PositiveNumber);
    laws->add_option("--out", o.out_path, "Write the JSON array to a file");

    std::vector<const char*> argv{"lexineq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "lexineq: " << e.what() << '\n';
        return 1;
    }

    try {
        if (o.window.size() != 4 || o.res.size() != 2) throw std::invalid_argument("bad --window or --res");
        if (*solve || *raster) grid_of(o);
        if (*solve) return cmd_solve(o, out);
        if (*check) return cmd_check(o, out);
        if (*raster) return cmd_raster(o, out);
        if (*laws) return cmd_laws(o, out);
    } catch (const ParseError& e) {
        err << "lexineq: parse error " << e.what() << '\n';
        return 1;
    } catch (const UnsupportedForm& e) {
        err << "lexineq: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "lexineq: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace lexineq::cli
