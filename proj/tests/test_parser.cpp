#include "doctest.h"

#include "expr_gen.hpp"
#include "lexineq/expr.hpp"
#include "lexineq/oracle.hpp"

using namespace lexineq;

namespace {

bool same(const SourceExpr& a, const SourceExpr& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t k = 0; k < a.parts.size(); ++k) {
        if (a.parts[k].relation != b.parts[k].relation) return false;
        if (!structurally_equal(*a.parts[k].lhs, *b.parts[k].lhs)) return false;
        if (!structurally_equal(*a.parts[k].rhs, *b.parts[k].rhs)) return false;
    }
    return true;
}

ParseError::Kind error_kind(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.kind;
    }
    FAIL("expected a parse error for " << text);
    return ParseError::Kind::Syntax;
}

} // namespace

TEST_CASE("parse: literals and the variable") {
    auto s = parse("Z >= 1+2i");
    REQUIRE(s.parts.size() == 1);
    CHECK(s.parts[0].relation == Relation::Ge);
    CHECK(s.parts[0].lhs->op == Expr::Op::Var);
    REQUIRE(s.parts[0].rhs->op == Expr::Op::Literal);
    CHECK(s.parts[0].rhs->value == Complex{1, 2});

    CHECK(parse_expression("i")->value == Complex{0, 1});
    CHECK(parse_expression("2.5i")->value == Complex{0, 2.5});
    CHECK(parse_expression("(3-4i)")->value == Complex{3, -4});
    CHECK(parse_expression("-(1+1i)")->value == Complex{-1, -1});
    CHECK(parse_expression("1e-3")->value == Complex{1e-3, 0});
    CHECK(parse_expression("z")->op == Expr::Op::Var);
}

TEST_CASE("parse: operator structure") {
    auto e = parse_expression("(2i)*Z - (1+1i)");
    REQUIRE(e->op == Expr::Op::Sub);
    CHECK(e->lhs->op == Expr::Op::Mul);
    CHECK(e->lhs->lhs->value == Complex{0, 2});
    CHECK(e->rhs->value == Complex{1, 1});

    e = parse_expression("Z^2 + 1");
    REQUIRE(e->op == Expr::Op::Add);
    CHECK(e->lhs->op == Expr::Op::Pow);
    CHECK(e->lhs->exponent == 2);

    // unary minus binds looser than '^'
    e = parse_expression("-Z^2");
    REQUIRE(e->op == Expr::Op::Neg);
    CHECK(e->lhs->op == Expr::Op::Pow);

    // left associativity
    e = parse_expression("1 - Z - Z");
    REQUIRE(e->op == Expr::Op::Sub);
    CHECK(e->lhs->op == Expr::Op::Sub);
    e = parse_expression("Z / 2 / Z");
    CHECK(e->lhs->op == Expr::Op::Div);
}

TEST_CASE("parse: '<=' and systems") {
    auto s = parse("1 <= Z");
    CHECK(s.parts[0].relation == Relation::Le);
    const auto ge = s.parts[0].as_ge();
    CHECK(ge.lhs->op == Expr::Op::Var);
    CHECK(ge.rhs->value == Complex{1, 0});
    s = parse("Z >= 1 && i*Z <= 2");
    CHECK(s.parts.size() == 2);
    CHECK(s.text == "Z >= 1 && i*Z <= 2");
}

TEST_CASE("parse: errors") {
    CHECK(error_kind("Z + W >= 0") == ParseError::Kind::MultipleVariables);
    CHECK(error_kind("Z^2.5 >= 0") == ParseError::Kind::NonIntegerExponent);
    CHECK(error_kind("Z^0 >= 0") == ParseError::Kind::NonIntegerExponent);
    CHECK(error_kind("Z^-1 >= 0") == ParseError::Kind::NonIntegerExponent);
    CHECK(error_kind("Z^Z >= 0") == ParseError::Kind::NonIntegerExponent);
    CHECK(error_kind("Z >= ") == ParseError::Kind::Syntax);
    CHECK(error_kind("Z > 0") == ParseError::Kind::Syntax);
    CHECK(error_kind("(Z >= 0") == ParseError::Kind::Syntax);
    CHECK(error_kind("Z >= 0 && Z >= 1 && Z >= 2") == ParseError::Kind::Syntax);
    CHECK(error_kind("Z >= 1e999") == ParseError::Kind::Syntax);
    try {
        parse("Z + 3 $ 2 >= 0");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
    try {
        parse("Z >= 1 +");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 8);
    }
}

TEST_CASE("printing: fixed forms") {
    CHECK(to_string(*parse_expression("(2i)*Z - (1+1i)")) == "2i*Z - (1+1i)");
    CHECK(to_string(*parse_expression("-(Z^2)")) == "-Z^2");
    CHECK(to_string(*parse_expression("(-Z)^2")) == "(-Z)^2");
    CHECK(to_string(*parse_expression("1 - (Z - 2)")) == "1 - (Z - 2)");
    CHECK(to_string(*parse_expression("-3 * -Z")) == "(-3)*-Z");
    CHECK(to_string(parse("1/Z >= 1 && Z <= -2i")) == "1/Z >= 1 && Z <= (-2i)");
}

TEST_CASE("print/parse round trip on random trees") {
    testing::ExprGen gen(77);
    for (int n = 0; n < 1000; ++n) {
        SourceExpr raw;
        raw.parts.push_back({gen.any(4), gen.any(3), gen.next() % 2 ? Relation::Ge : Relation::Le});
        const SourceExpr first = parse(to_string(raw));
        const std::string printed = to_string(first);
        const SourceExpr second = parse(printed);
        INFO(printed);
        CHECK(same(first, second));
        CHECK(to_string(second) == printed);
    }
}

TEST_CASE("classify_problem: worked examples") {
    auto c = classify_problem(parse("Z^2 + 1 >= 0"));
    CHECK(std::get<Quadratic>(c.problem) == Quadratic{{1, 0}, {0, 0}, {1, 0}});
    c = classify_problem(parse("1/Z >= 1"));
    CHECK(std::get<Fractional>(c.problem) == Fractional{{0, 0}, {1, 0}, {0, 0}, {1, 0}});
    c = classify_problem(parse("Z >= 1+2i"));
    CHECK(std::get<Linear>(c.problem) == Linear{{1, 0}, {1, 2}});
    c = classify_problem(parse("(2i)*Z - (1+1i) >= 0"));
    CHECK(std::get<Linear>(c.problem) == Linear{{0, 2}, {1, 1}});
    c = classify_problem(parse("Z >= 1 && 2 <= i*Z"));
    CHECK(std::get<LinearSystem>(c.problem) == LinearSystem{{1, 0}, {1, 0}, {0, 1}, {2, 0}});
    CHECK_THROWS_AS(classify_problem(parse("Z^3 >= 0")), UnsupportedForm);
}

TEST_CASE("classify_problem: normalization") {
    // everything moves to one side
    auto c = classify_problem(parse("3*Z + 1 >= Z - 2"));
    CHECK(std::get<Linear>(c.problem) == Linear{{2, 0}, {-3, 0}});
    // products expand
    c = classify_problem(parse("(Z + 1)*(Z - 1) >= 0"));
    CHECK(std::get<Quadratic>(c.problem) == Quadratic{{1, 0}, {0, 0}, {-1, 0}});
    // cancelling the leading term drops the degree
    c = classify_problem(parse("Z^2 + Z >= Z^2"));
    CHECK(std::holds_alternative<Linear>(c.problem));
    // constants are degenerate linear problems
    c = classify_problem(parse("1 >= 0"));
    CHECK(std::get<Linear>(c.problem) == Linear{{0, 0}, {-1, 0}});
    // denominators scale to Z + C
    c = classify_problem(parse("(Z + 1)/(2*Z + 4) >= 3"));
    CHECK(std::get<Fractional>(c.problem) == Fractional{{0.5, 0}, {0.5, 0}, {2, 0}, {3, 0}});
    CHECK(c.denominator_scale == Complex{2, 0});
    // a constant on the left and a fraction on the right
    c = classify_problem(parse("1 >= 1/Z"));
    CHECK(std::get<Fractional>(c.problem) == Fractional{{1, 0}, {-1, 0}, {0, 0}, {0, 0}});
    // common factors cancel
    c = classify_problem(parse("(Z + 1)^2/((Z + 1)*(Z - 2)) >= 0"));
    REQUIRE(std::holds_alternative<Fractional>(c.problem));
    const auto f = std::get<Fractional>(c.problem);
    CHECK(f.c == Complex{-2, 0});
    CHECK(f.b == Complex{1, 0});
    // division by constants stays polynomial
    c = classify_problem(parse("Z/2 >= 1"));
    CHECK(std::get<Linear>(c.problem) == Linear{{0.5, 0}, {1, 0}});
}

TEST_CASE("classify_problem: unsupported shapes") {
    CHECK_THROWS_AS(classify_problem(parse("Z + 1/Z >= 0")), UnsupportedForm);
    CHECK_THROWS_AS(classify_problem(parse("1/(Z^2 + 1) >= 0")), UnsupportedForm);
    CHECK_THROWS_AS(classify_problem(parse("1/(Z - Z) >= 0")), UnsupportedForm);
    CHECK_THROWS_AS(classify_problem(parse("Z^2 >= 0 && Z >= 1")), UnsupportedForm);
    try {
        classify_problem(parse("Z^4 >= 1"));
    } catch (const UnsupportedForm& e) {
        CHECK(std::string(e.what()).find("degree 4") != std::string::npos);
    }
}

TEST_CASE("canonical forms evaluate like the source expression") {
    testing::ExprGen gen(91);
    int checked = 0;
    for (int n = 0; n < 500; ++n) {
        const SourceExpr src = parse(to_string(gen.solvable()));
        ClassifiedProblem c;
        try {
            c = classify_problem(src);
        } catch (const UnsupportedForm&) {
            continue;
        }
        ++checked;
        for (int k = 0; k < 10; ++k) {
            const Complex z = gen.probe();
            std::vector<Complex> original;
            try {
                for (const auto& part : src.parts) {
                    const auto q = part.as_ge();
                    original.push_back(evaluate(*q.lhs, z) - evaluate(*q.rhs, z));
                }
            } catch (const DivisionByZero&) {
                CHECK(eval_direct(c.problem, z) == Membership::Pole);
                continue;
            }
            const auto canonical = evaluate_lhs(c.problem, z);
            INFO(to_string(src));
            REQUIRE(canonical.size() == original.size());
            for (std::size_t m = 0; m < original.size(); ++m) CHECK(canonical[m] == original[m]);
        }
    }
    CHECK(checked > 450);
}

TEST_CASE("'<=' is the complement of '>=' off the boundary") {
    testing::ExprGen gen(5);
    for (int n = 0; n < 200; ++n) {
        const ExprPtr f = gen.poly(2), g = gen.poly(1);
        SourceExpr le, ge, swapped;
        le.parts.push_back({f, g, Relation::Le});
        ge.parts.push_back({f, g, Relation::Ge});
        swapped.parts.push_back({g, f, Relation::Ge});
        const auto ple = classify_problem(le).problem;
        const auto pge = classify_problem(ge).problem;
        const auto psw = classify_problem(swapped).problem;
        for (int k = 0; k < 20; ++k) {
            const Complex z = gen.probe();
            const Complex v = evaluate(*f, z) - evaluate(*g, z);
            CHECK(eval_direct(ple, z) == eval_direct(psw, z));
            if (v.is_zero()) continue;
            CHECK((eval_direct(ple, z) == Membership::In) != (eval_direct(pge, z) == Membership::In));
        }
    }
}
