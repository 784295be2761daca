#include "lexineq/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace lexineq {

ExprPtr Expr::literal(Complex v) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Literal;
    e->value = v;
    return e;
}

ExprPtr Expr::var() {
    auto e = std::make_shared<Expr>();
    e->op = Op::Var;
    return e;
}

ExprPtr Expr::neg(ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Neg;
    e->lhs = std::move(a);
    return e;
}

ExprPtr Expr::binary(Op op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::pow(ExprPtr base, unsigned n) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Pow;
    e->exponent = n;
    e->lhs = std::move(base);
    return e;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
    case Expr::Op::Literal: return a.value == b.value;
    case Expr::Op::Var: return true;
    case Expr::Op::Neg: return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Op::Pow: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

bool mentions_variable(const Expr& e) {
    if (e.op == Expr::Op::Var) return true;
    return (e.lhs && mentions_variable(*e.lhs)) || (e.rhs && mentions_variable(*e.rhs));
}

Complex evaluate(const Expr& e, Complex z) {
    switch (e.op) {
    case Expr::Op::Literal: return e.value;
    case Expr::Op::Var: return z;
    case Expr::Op::Neg: return -evaluate(*e.lhs, z);
    case Expr::Op::Add: return evaluate(*e.lhs, z) + evaluate(*e.rhs, z);
    case Expr::Op::Sub: return evaluate(*e.lhs, z) - evaluate(*e.rhs, z);
    case Expr::Op::Mul: return evaluate(*e.lhs, z) * evaluate(*e.rhs, z);
    case Expr::Op::Div: return evaluate(*e.lhs, z) / evaluate(*e.rhs, z);
    case Expr::Op::Pow: {
        const Complex base = evaluate(*e.lhs, z);
        Complex acc = base;
        for (unsigned k = 1; k < e.exponent; ++k) acc = acc * base;
        return acc;
    }
    }
    return {};
}

Inequality Inequality::as_ge() const {
    if (relation == Relation::Ge) return *this;
    return {rhs, lhs, Relation::Ge};
}

ParseError::ParseError(Kind k, std::size_t off, const std::string& msg)
    : std::runtime_error("at offset " + std::to_string(off) + ": " + msg), kind(k), offset(off) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Number, Imag, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Ge, Le, And, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

constexpr unsigned kMaxExponent = 64;

class Lexer {
public:
    explicit Lexer(std::string_view s) : src_(s) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, {}};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, start, src_.substr(start, pos_ - start)};
        }
        auto two = [&](char second, Tok t) -> std::optional<Token> {
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == second) {
                pos_ += 2;
                return Token{t, start, src_.substr(start, 2)};
            }
            return std::nullopt;
        };
        switch (c) {
        case '>': if (auto t = two('=', Tok::Ge)) return *t; break;
        case '<': if (auto t = two('=', Tok::Le)) return *t; break;
        case '&': if (auto t = two('&', Tok::And)) return *t; break;
        case '+': ++pos_; return {Tok::Plus, start, src_.substr(start, 1)};
        case '-': ++pos_; return {Tok::Minus, start, src_.substr(start, 1)};
        case '*': ++pos_; return {Tok::Star, start, src_.substr(start, 1)};
        case '/': ++pos_; return {Tok::Slash, start, src_.substr(start, 1)};
        case '^': ++pos_; return {Tok::Caret, start, src_.substr(start, 1)};
        case '(': ++pos_; return {Tok::LParen, start, src_.substr(start, 1)};
        case ')': ++pos_; return {Tok::RParen, start, src_.substr(start, 1)};
        default: break;
        }
        throw ParseError(ParseError::Kind::Syntax, start, std::string("unexpected character '") + c + "'");
    }

private:
    Token number(std::size_t start) {
        double v = 0.0;
        const char* first = src_.data() + pos_;
        const char* last = src_.data() + src_.size();
        auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
        if (ec != std::errc{} || ptr == first)
            throw ParseError(ParseError::Kind::Syntax, start, "malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        Tok kind = Tok::Number;
        // a trailing 'i' not followed by more identifier characters is the imaginary unit
        if (pos_ < src_.size() && src_[pos_] == 'i' &&
            (pos_ + 1 >= src_.size() ||
             !(std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])) || src_[pos_ + 1] == '_'))) {
            ++pos_;
            kind = Tok::Imag;
        }
        return {kind, start, src_.substr(start, pos_ - start), v};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive descent

bool is_literal(const ExprPtr& e) { return e->op == Expr::Op::Literal; }

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { advance(); }

    SourceExpr source() {
        SourceExpr out;
        out.parts.push_back(inequality());
        if (cur_.kind == Tok::And) {
            advance();
            out.parts.push_back(inequality());
        }
        expect_end();
        return out;
    }

    ExprPtr lone_expression() {
        auto e = expr();
        expect_end();
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& what) const {
        const std::string found = cur_.kind == Tok::End ? "end of input" : "'" + std::string(cur_.text) + "'";
        throw ParseError(ParseError::Kind::Syntax, cur_.offset, what + ", found " + found);
    }

    void expect_end() {
        if (cur_.kind != Tok::End) fail("expected end of input");
    }

    Inequality inequality() {
        Inequality q;
        q.lhs = expr();
        if (cur_.kind == Tok::Ge) q.relation = Relation::Ge;
        else if (cur_.kind == Tok::Le) q.relation = Relation::Le;
        else fail("expected '>=' or '<='");
        advance();
        q.rhs = expr();
        return q;
    }

    ExprPtr expr() {
        auto lhs = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool plus = cur_.kind == Tok::Plus;
            advance();
            auto rhs = term();
            // a + bi written out is one complex literal
            if (is_literal(lhs) && is_literal(rhs) && lhs->value.im == 0.0 && rhs->value.re == 0.0) {
                const double im = plus ? rhs->value.im : -rhs->value.im + 0.0;
                lhs = Expr::literal({lhs->value.re, im});
                continue;
            }
            lhs = Expr::binary(plus ? Expr::Op::Add : Expr::Op::Sub, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr term() {
        auto lhs = factor();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const auto op = cur_.kind == Tok::Star ? Expr::Op::Mul : Expr::Op::Div;
            advance();
            lhs = Expr::binary(op, std::move(lhs), factor());
        }
        return lhs;
    }

    ExprPtr factor() {
        if (cur_.kind == Tok::Minus) {
            advance();
            auto operand = factor();
            if (is_literal(operand)) return Expr::literal({-operand->value.re + 0.0, -operand->value.im + 0.0});
            return Expr::neg(std::move(operand));
        }
        auto base = primary();
        if (cur_.kind != Tok::Caret) return base;
        advance();
        const auto bad = [&] {
            return ParseError(ParseError::Kind::NonIntegerExponent, cur_.offset,
                              "exponent must be a positive integer literal");
        };
        if (cur_.kind != Tok::Number) throw bad();
        for (char ch : cur_.text)
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
        if (cur_.number < 1.0) throw bad();
        if (cur_.number > kMaxExponent)
            throw ParseError(ParseError::Kind::NonIntegerExponent, cur_.offset, "exponent exceeds 64");
        const auto n = static_cast<unsigned>(cur_.number);
        advance();
        return Expr::pow(std::move(base), n);
    }

    ExprPtr primary() {
        switch (cur_.kind) {
        case Tok::Number: {
            auto e = Expr::literal({cur_.number, 0.0});
            advance();
            return e;
        }
        case Tok::Imag: {
            auto e = Expr::literal({0.0, cur_.number});
            advance();
            return e;
        }
        case Tok::Ident: {
            const auto name = cur_.text;
            if (name == "i") {
                advance();
                return Expr::literal({0.0, 1.0});
            }
            if (name == "Z" || name == "z") {
                advance();
                return Expr::var();
            }
            throw ParseError(ParseError::Kind::MultipleVariables, cur_.offset,
                             "only the variable Z is allowed, found '" + std::string(name) + "'");
        }
        case Tok::LParen: {
            advance();
            auto e = expr();
            if (cur_.kind != Tok::RParen) fail("expected ')'");
            advance();
            return e;
        }
        default:
            fail("expected a number, 'i', 'Z' or '('");
        }
    }

    Lexer lex_;
    Token cur_{Tok::End, 0, {}};
};

// ---------------------------------------------------------------------------
// Printing

std::string num(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

constexpr int kAtom = 5;

int precedence(const Expr& e) {
    switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::Sub: return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 2;
    case Expr::Op::Neg: return 3;
    case Expr::Op::Pow: return 4;
    default: return kAtom;
    }
}

// Literals that do not read as a single token are parenthesized, which makes
// every literal atomic.
std::string literal_text(Complex v) {
    const bool neg_zero_re = v.re == 0.0 && std::signbit(v.re);
    if (v.im == 0.0) {
        if (v.re > 0.0 || (v.re == 0.0 && !neg_zero_re)) return num(v.re);
        return "(-" + num(-v.re) + ")";
    }
    if (v.re == 0.0) {
        if (v.im > 0.0) return num(v.im) + "i";
        return "(-" + num(-v.im) + "i)";
    }
    std::string s = "(" + (v.re < 0.0 ? "-" + num(-v.re) : num(v.re));
    s += v.im < 0.0 ? "-" + num(-v.im) + "i)" : "+" + num(v.im) + "i)";
    return s;
}

std::string print(const Expr& e);

std::string wrap(const Expr& e, bool paren) { return paren ? "(" + print(e) + ")" : print(e); }

std::string print(const Expr& e) {
    const int p = precedence(e);
    switch (e.op) {
    case Expr::Op::Literal: return literal_text(e.value);
    case Expr::Op::Var: return "Z";
    case Expr::Op::Neg: return "-" + wrap(*e.lhs, precedence(*e.lhs) <= p);
    case Expr::Op::Pow: return wrap(*e.lhs, precedence(*e.lhs) < kAtom) + "^" + std::to_string(e.exponent);
    default: break;
    }
    const char* sym = e.op == Expr::Op::Add ? " + " : e.op == Expr::Op::Sub ? " - " : e.op == Expr::Op::Mul ? "*" : "/";
    return wrap(*e.lhs, precedence(*e.lhs) < p) + sym + wrap(*e.rhs, precedence(*e.rhs) <= p);
}

} // namespace

SourceExpr parse(std::string_view text) {
    SourceExpr s = Parser(text).source();
    s.text = std::string(text);
    return s;
}

ExprPtr parse_expression(std::string_view text) { return Parser(text).lone_expression(); }

std::string to_string(const Expr& e) { return print(e); }

std::string to_string(const SourceExpr& s) {
    std::string out;
    for (std::size_t k = 0; k < s.parts.size(); ++k) {
        if (k) out += " && ";
        const auto& q = s.parts[k];
        out += print(*q.lhs) + (q.relation == Relation::Ge ? " >= " : " <= ") + print(*q.rhs);
    }
    return out;
}

} // namespace lexineq
