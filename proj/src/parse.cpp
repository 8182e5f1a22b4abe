#include "qgwa/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <memory>
#include <vector>

#include "qgwa/errors.hpp"

namespace qgwa {
namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { Int, Ident, LParen, RParen, Plus, Minus, Star, Slash, Caret, End };

struct Token {
    Tok kind = Tok::End;
    std::size_t pos = 0;  // absolute offset into the original input
    long value = 0;       // Tok::Int
    std::string ident;    // Tok::Ident
};

class Lexer {
public:
    // `base` rebases reported offsets so that errors inside a value substring
    // of a larger spec line point into the original line.
    Lexer(const std::string& text, std::size_t base) : text_(text), base_(base) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw SyntaxError(msg, pos);
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        cur_ = Token{};
        cur_.pos = base_ + i_;
        if (i_ >= text_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                const long d = text_[i_] - '0';
                if (v > (std::numeric_limits<long>::max() - d) / 10)
                    fail("integer literal is too large", cur_.pos);
                v = v * 10 + d;
                ++i_;
            }
            cur_.kind = Tok::Int;
            cur_.value = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                ++i_;
            cur_.kind = Tok::Ident;
            cur_.ident = text_.substr(start, i_ - start);
            return;
        }
        ++i_;
        switch (c) {
            case '(': cur_.kind = Tok::LParen; return;
            case ')': cur_.kind = Tok::RParen; return;
            case '+': cur_.kind = Tok::Plus; return;
            case '-': cur_.kind = Tok::Minus; return;
            case '*': cur_.kind = Tok::Star; return;
            case '/': cur_.kind = Tok::Slash; return;
            case '^': cur_.kind = Tok::Caret; return;
            default: fail(std::string("unexpected character '") + c + "'", cur_.pos);
        }
    }

    const std::string& text_;
    std::size_t base_;
    std::size_t i_ = 0;
    Token cur_;
};

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Kind { Num, Zeta, Gen, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    std::size_t pos = 0;
    long num = 0;      // Num: the value; Zeta: declared order (0 if bare); Pow: exponent
    std::string gen;   // Gen: generator name
    NodePtr lhs, rhs;  // operands (unary operand in lhs)
};

NodePtr node(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

// ---------------------------------------------------------------------------
// Parser: sum := product (('+'|'-') product)*, etc. (see the header)
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(Lexer& lex) : lex_(lex) {}

    NodePtr parse_sum() {
        NodePtr left = parse_product();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Token op = lex_.next();
            auto n = node(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, op.pos);
            n->lhs = std::move(left);
            n->rhs = parse_product();
            left = std::move(n);
        }
        return left;
    }

private:
    NodePtr parse_product() {
        NodePtr left = parse_unary();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            Token op = lex_.next();
            auto n = node(op.kind == Tok::Star ? Node::Kind::Mul : Node::Kind::Div, op.pos);
            n->lhs = std::move(left);
            n->rhs = parse_unary();
            left = std::move(n);
        }
        return left;
    }

    NodePtr parse_unary() {
        if (lex_.peek().kind == Tok::Minus) {
            Token op = lex_.next();
            auto n = node(Node::Kind::Neg, op.pos);
            n->lhs = parse_unary();
            return n;
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        Token caret = lex_.next();
        auto n = node(Node::Kind::Pow, caret.pos);
        n->num = parse_exponent();
        n->lhs = std::move(base);
        return n;
    }

    // exponent := ['-'] integer | '(' ['-'] integer ')'
    long parse_exponent() {
        bool parens = false;
        if (lex_.peek().kind == Tok::LParen) {
            parens = true;
            lex_.next();
        }
        long sign = 1;
        if (lex_.peek().kind == Tok::Minus) {
            sign = -1;
            lex_.next();
        }
        if (lex_.peek().kind != Tok::Int)
            lex_.fail("expected an integer exponent after '^'", lex_.peek().pos);
        long v = lex_.next().value;
        if (parens) {
            if (lex_.peek().kind != Tok::RParen)
                lex_.fail("expected ')' to close the exponent", lex_.peek().pos);
            lex_.next();
        }
        return sign * v;
    }

    NodePtr parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                Token tok = lex_.next();
                auto n = node(Node::Kind::Num, tok.pos);
                n->num = tok.value;
                return n;
            }
            case Tok::Ident: {
                Token tok = lex_.next();
                if (tok.ident == "zeta") {
                    auto n = node(Node::Kind::Zeta, tok.pos);
                    if (lex_.peek().kind == Tok::LParen) {
                        lex_.next();
                        if (lex_.peek().kind != Tok::Int)
                            lex_.fail("expected an integer inside zeta(...)", lex_.peek().pos);
                        n->num = lex_.next().value;
                        if (lex_.peek().kind != Tok::RParen)
                            lex_.fail("expected ')' after the zeta order", lex_.peek().pos);
                        lex_.next();
                    }
                    return n;
                }
                auto n = node(Node::Kind::Gen, tok.pos);
                n->gen = tok.ident;
                return n;
            }
            case Tok::LParen: {
                lex_.next();
                NodePtr inner = parse_sum();
                if (lex_.peek().kind != Tok::RParen)
                    lex_.fail("expected ')'", lex_.peek().pos);
                lex_.next();
                return inner;
            }
            case Tok::End:
                lex_.fail("unexpected end of input", t.pos);
            default:
                lex_.fail("expected a number, generator, or '('", t.pos);
        }
    }

    Lexer& lex_;
};

NodePtr parse_expression(const std::string& text, std::size_t base) {
    Lexer lex(text, base);
    Parser parser(lex);
    NodePtr ast = parser.parse_sum();
    if (lex.peek().kind != Tok::End)
        throw SyntaxError("unexpected trailing input", lex.peek().pos);
    return ast;
}

// ---------------------------------------------------------------------------
// Evaluators
// ---------------------------------------------------------------------------

FieldElement zeta_value(const Node& n, const FieldSpec& field) {
    if (field.kind != FieldSpec::Kind::Cyclotomic)
        throw SyntaxError("zeta needs a cyclotomic field, but the field is Q", n.pos);
    if (n.num != 0 && n.num != field.n)
        throw SyntaxError("zeta(" + std::to_string(n.num) + ") does not match the field " +
                              field.to_string(),
                          n.pos);
    return FieldElement::zeta(field);
}

FieldElement eval_scalar(const Node& n, const FieldSpec& field) {
    switch (n.kind) {
        case Node::Kind::Num: return FieldElement::from_long(field, n.num);
        case Node::Kind::Zeta: return zeta_value(n, field);
        case Node::Kind::Gen:
            throw SyntaxError("'" + n.gen + "' is not allowed in a scalar", n.pos);
        case Node::Kind::Neg: return -eval_scalar(*n.lhs, field);
        case Node::Kind::Add: return eval_scalar(*n.lhs, field) + eval_scalar(*n.rhs, field);
        case Node::Kind::Sub: return eval_scalar(*n.lhs, field) - eval_scalar(*n.rhs, field);
        case Node::Kind::Mul: return eval_scalar(*n.lhs, field) * eval_scalar(*n.rhs, field);
        case Node::Kind::Div:
            return eval_scalar(*n.lhs, field) * eval_scalar(*n.rhs, field).inverse();
        case Node::Kind::Pow: return eval_scalar(*n.lhs, field).pow(n.num);
    }
    throw SyntaxError("malformed expression", n.pos);
}

LaurentPoly eval_poly(const Node& n, const FieldSpec& field, RingFlag ring) {
    switch (n.kind) {
        case Node::Kind::Num:
            return LaurentPoly::constant(field, ring, FieldElement::from_long(field, n.num));
        case Node::Kind::Zeta:
            return LaurentPoly::constant(field, ring, zeta_value(n, field));
        case Node::Kind::Gen:
            if (n.gen == "h") return LaurentPoly::h(field, ring);
            if (n.gen == "hinv") {
                if (ring != RingFlag::Laurent)
                    throw ValidationError("hinv requires the Laurent ring");
                return LaurentPoly::monomial(field, ring, -1, FieldElement::one(field));
            }
            throw SyntaxError("'" + n.gen + "' is not allowed in a polynomial in h", n.pos);
        case Node::Kind::Neg: return -eval_poly(*n.lhs, field, ring);
        case Node::Kind::Add:
            return eval_poly(*n.lhs, field, ring) + eval_poly(*n.rhs, field, ring);
        case Node::Kind::Sub:
            return eval_poly(*n.lhs, field, ring) - eval_poly(*n.rhs, field, ring);
        case Node::Kind::Mul:
            return eval_poly(*n.lhs, field, ring) * eval_poly(*n.rhs, field, ring);
        case Node::Kind::Div: {
            LaurentPoly d = eval_poly(*n.rhs, field, ring);
            if (!d.is_constant())
                throw ValidationError("division of polynomials is only by scalars");
            return eval_poly(*n.lhs, field, ring) * d.coeff(0).inverse();
        }
        case Node::Kind::Pow: {
            LaurentPoly base = eval_poly(*n.lhs, field, ring);
            if (n.num >= 0) return base.pow(n.num);
            if (ring != RingFlag::Laurent)
                throw ValidationError("negative powers of h require the Laurent ring");
            if (base.is_zero()) throw DivisionByZero();
            if (base.term_count() != 1)
                throw ValidationError("negative powers need a single-term base");
            const long e = base.min_exp();
            return LaurentPoly::monomial(field, ring, e * n.num, base.coeff(e).pow(n.num));
        }
    }
    throw SyntaxError("malformed expression", n.pos);
}

AlgebraElement eval_element(const Node& n, const AlgebraSpec& spec) {
    const FieldSpec& field = spec.field();
    switch (n.kind) {
        case Node::Kind::Num:
            return AlgebraElement::scalar(spec, FieldElement::from_long(field, n.num));
        case Node::Kind::Zeta:
            return AlgebraElement::scalar(spec, zeta_value(n, field));
        case Node::Kind::Gen:
            if (n.gen == "y") return AlgebraElement::gen_y(spec);
            if (n.gen == "h") return AlgebraElement::gen_h(spec);
            if (n.gen == "x") return AlgebraElement::gen_x(spec);
            if (n.gen == "hinv") return AlgebraElement::gen_hinv(spec);
            throw SyntaxError("unknown symbol '" + n.gen + "'", n.pos);
        case Node::Kind::Neg: return -eval_element(*n.lhs, spec);
        case Node::Kind::Add: return eval_element(*n.lhs, spec) + eval_element(*n.rhs, spec);
        case Node::Kind::Sub: return eval_element(*n.lhs, spec) - eval_element(*n.rhs, spec);
        case Node::Kind::Mul: return eval_element(*n.lhs, spec) * eval_element(*n.rhs, spec);
        case Node::Kind::Div: {
            AlgebraElement d = eval_element(*n.rhs, spec);
            if (d.is_zero()) throw DivisionByZero();
            if (d.term_count() != 1 || d.terms().begin()->first != StdMonomial{})
                throw ValidationError("division of algebra elements is only by scalars");
            return eval_element(*n.lhs, spec) * d.coeff(0, 0).inverse();
        }
        case Node::Kind::Pow: return eval_element(*n.lhs, spec).pow(n.num);
    }
    throw SyntaxError("malformed expression", n.pos);
}

// ---------------------------------------------------------------------------
// Field declarations and full specs
// ---------------------------------------------------------------------------

FieldSpec parse_field_at(const std::string& text, std::size_t base) {
    Lexer lex(text, base);
    Token name = lex.next();
    if (name.kind != Tok::Ident || name.ident != "Q")
        lex.fail("expected a field: Q or Q(zeta(n))", name.pos);
    if (lex.peek().kind == Tok::End) return FieldSpec::rationals();
    auto expect = [&lex](Tok kind, const char* what) {
        if (lex.peek().kind != kind) lex.fail(std::string("expected ") + what, lex.peek().pos);
        return lex.next();
    };
    expect(Tok::LParen, "'('");
    Token z = expect(Tok::Ident, "zeta");
    if (z.ident != "zeta") lex.fail("expected zeta", z.pos);
    expect(Tok::LParen, "'('");
    Token order = expect(Tok::Int, "an integer order");
    expect(Tok::RParen, "')'");
    expect(Tok::RParen, "')'");
    if (lex.peek().kind != Tok::End) lex.fail("unexpected trailing input", lex.peek().pos);
    return FieldSpec::cyclotomic(order.value);
}

struct RawValue {
    std::size_t start = 0;  // offset of the first value character
    std::size_t end = 0;    // one past the last value character
    bool present = false;
};

}  // namespace

FieldElement parse_scalar(const std::string& text, const FieldSpec& field) {
    return eval_scalar(*parse_expression(text, 0), field);
}

LaurentPoly parse_poly(const std::string& text, const FieldSpec& field, RingFlag ring) {
    return eval_poly(*parse_expression(text, 0), field, ring);
}

AlgebraElement parse_element(const std::string& text, const AlgebraSpec& spec) {
    return eval_element(*parse_expression(text, 0), spec);
}

FieldSpec parse_field(const std::string& text) { return parse_field_at(text, 0); }

AlgebraSpec parse_spec(const std::string& text, const std::optional<FieldSpec>& default_field) {
    // Split into whitespace-separated tokens; key=... tokens open a value
    // that extends until the next key token, preserving original offsets so
    // expression errors point into `text`.
    RawValue values[4];  // field, d, q, a
    constexpr const char* kKeys[4] = {"field", "d", "q", "a"};
    int open = -1;

    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::string token = text.substr(start, i - start);
        const std::size_t eq = token.find('=');

        bool is_key = false;
        if (eq != std::string::npos) {
            const std::string key = token.substr(0, eq);
            int which = -1;
            for (int k = 0; k < 4; ++k)
                if (key == kKeys[k]) which = k;
            if (which >= 0) {
                if (values[which].present)
                    throw SyntaxError("duplicate key '" + key + "'", start);
                values[which].present = true;
                values[which].start = start + eq + 1;
                values[which].end = i;
                open = which;
                is_key = true;
            } else if (open < 0) {
                throw SyntaxError("unknown key '" + key + "'", start);
            }
        }
        if (!is_key) {
            if (token == "algebra" && open != 3) continue;  // marker between field and d=
            if (open < 0) throw SyntaxError("unexpected token '" + token + "'", start);
            values[open].end = i;
        }
    }

    auto value_of = [&text](const RawValue& v) {
        return text.substr(v.start, v.end - v.start);
    };

    FieldSpec field = FieldSpec::rationals();
    if (values[0].present) {
        field = parse_field_at(value_of(values[0]), values[0].start);
    } else if (default_field.has_value()) {
        field = *default_field;
    } else if (const char* env = std::getenv("QGWA_FIELD")) {
        field = parse_field_at(env, 0);
    }

    if (!values[1].present) throw SyntaxError("missing d=poly|laurent", text.size());
    const std::string dval = value_of(values[1]);
    RingFlag ring;
    if (dval == "poly")
        ring = RingFlag::Poly;
    else if (dval == "laurent")
        ring = RingFlag::Laurent;
    else
        throw SyntaxError("d must be poly or laurent, got '" + dval + "'", values[1].start);

    if (!values[2].present) throw SyntaxError("missing q=<scalar>", text.size());
    FieldElement q = eval_scalar(*parse_expression(value_of(values[2]), values[2].start), field);

    if (!values[3].present) throw SyntaxError("missing a=<polynomial>", text.size());
    LaurentPoly a =
        eval_poly(*parse_expression(value_of(values[3]), values[3].start), field, ring);

    return AlgebraSpec::make(field, ring, q, a);
}

}  // namespace qgwa
