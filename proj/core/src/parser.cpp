#include "hyperlogic/parser.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace hyperlogic {

namespace {

enum class Tok { Ident, LParen, RParen, LBrack, RBrack, Dot, Not, And, Or, Imp, Iff, Le, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        auto starts = [&](std::string_view t) { return s.substr(i, t.size()) == t; };
        if (starts("<->")) {
            out.push_back({Tok::Iff, "<->", i});
            i += 3;
        } else if (starts("->")) {
            out.push_back({Tok::Imp, "->", i});
            i += 2;
        } else if (starts("<=")) {
            out.push_back({Tok::Le, "<=", i});
            i += 2;
        } else {
            Tok k;
            switch (c) {
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '[': k = Tok::LBrack; break;
                case ']': k = Tok::RBrack; break;
                case '.': k = Tok::Dot; break;
                case '!': k = Tok::Not; break;
                case '&': k = Tok::And; break;
                case '|': k = Tok::Or; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            out.push_back({k, std::string(1, c), i});
            ++i;
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string>& keywords() {
    static const std::set<std::string> k{"exists", "forall", "true", "false", "X", "U", "F", "G"};
    return k;
}

bool is_keyword(const Token& t, const char* word) { return t.kind == Tok::Ident && t.text == word; }

// One parser template serves both ASTs; `Fo` selects the atom syntax.
template <bool Fo>
class Parser {
public:
    using F = std::conditional_t<Fo, FoFormula, Formula>;

    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    F parse_all() {
        F f = parse_iff();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    std::string identifier(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident || keywords().count(t.text)) fail(std::string("expected ") + what);
        ++pos_;
        return t.text;
    }

    static F mk_binary(Tok op, F a, F b) {
        if constexpr (Fo) {
            switch (op) {
                case Tok::Iff: return fo::iff(std::move(a), std::move(b));
                case Tok::Imp: return fo::implies(std::move(a), std::move(b));
                case Tok::Or: return fo::lor(std::move(a), std::move(b));
                default: return fo::land(std::move(a), std::move(b));
            }
        } else {
            switch (op) {
                case Tok::Iff: return fml::iff(std::move(a), std::move(b));
                case Tok::Imp: return fml::implies(std::move(a), std::move(b));
                case Tok::Or: return fml::lor(std::move(a), std::move(b));
                default: return fml::land(std::move(a), std::move(b));
            }
        }
    }

    F parse_iff() {
        F lhs = parse_imp();
        while (peek().kind == Tok::Iff) {
            advance();
            lhs = mk_binary(Tok::Iff, lhs, parse_imp());
        }
        return lhs;
    }

    F parse_imp() {
        F lhs = parse_or();
        if (peek().kind == Tok::Imp) {
            advance();
            return mk_binary(Tok::Imp, lhs, parse_imp());
        }
        return lhs;
    }

    F parse_or() {
        F lhs = parse_and();
        while (peek().kind == Tok::Or) {
            advance();
            lhs = mk_binary(Tok::Or, lhs, parse_and());
        }
        return lhs;
    }

    F parse_and() {
        F lhs = parse_until();
        while (peek().kind == Tok::And) {
            advance();
            lhs = mk_binary(Tok::And, lhs, parse_until());
        }
        return lhs;
    }

    F parse_until() {
        F lhs = parse_unary();
        if (is_keyword(peek(), "U")) {
            if constexpr (Fo) {
                fail("temporal operator in first-order formula");
            } else {
                advance();
                return fml::until(lhs, parse_until());
            }
        }
        return lhs;
    }

    F parse_unary() {
        const Token& t = peek();
        if (t.kind == Tok::Not) {
            advance();
            if constexpr (Fo) {
                return fo::neg(parse_unary());
            } else {
                return fml::neg(parse_unary());
            }
        }
        if (t.kind == Tok::Ident && (t.text == "X" || t.text == "F" || t.text == "G")) {
            if constexpr (Fo) {
                fail("temporal operator in first-order formula");
            } else {
                const std::string op = advance().text;
                Formula body = parse_unary();
                if (op == "X") return fml::next(body);
                if (op == "F") return fml::eventually(body);
                return fml::always(body);
            }
        }
        if (is_keyword(t, "exists") || is_keyword(t, "forall")) {
            const bool ex = advance().text == "exists";
            std::string var = identifier("variable after quantifier");
            expect(Tok::Dot, "'.' after quantified variable");
            F body = parse_iff();
            if constexpr (Fo) {
                return ex ? fo::exists(var, body) : fo::forall(var, body);
            } else {
                return ex ? fml::exists(var, body) : fml::forall(var, body);
            }
        }
        return parse_primary();
    }

    F parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            advance();
            F f = parse_iff();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (is_keyword(t, "true") || is_keyword(t, "false")) {
            const bool v = advance().text == "true";
            if constexpr (Fo) {
                return v ? fo::top() : fo::bottom();
            } else {
                return v ? fml::top() : fml::bottom();
            }
        }
        std::string name = identifier("formula");
        if constexpr (Fo) {
            if (peek().kind == Tok::LParen) {
                advance();
                std::string var = identifier("variable");
                expect(Tok::RParen, "')'");
                return fo::atom(name, var);
            }
            if (peek().kind == Tok::Le) {
                advance();
                return fo::le(name, identifier("variable"));
            }
            fail("expected '(' or '<=' after identifier");
        } else {
            expect(Tok::LBrack, "'[' after proposition");
            std::string var = identifier("trace variable");
            expect(Tok::RBrack, "']'");
            return fml::atom(name, var);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void walk_shadowing(const Formula& f, std::vector<std::string>& bound) {
    if (f.is_quantifier()) {
        for (const auto& b : bound) {
            if (b == f.var()) throw ScopeError("variable " + f.var() + " is bound twice on one path");
        }
        bound.push_back(f.var());
        walk_shadowing(f.lhs(), bound);
        bound.pop_back();
        return;
    }
    if (f.is_unary()) walk_shadowing(f.lhs(), bound);
    if (f.is_binary()) {
        walk_shadowing(f.lhs(), bound);
        walk_shadowing(f.rhs(), bound);
    }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser<false>(text).parse_all(); }

void check_closed(const Formula& f) {
    const auto fv = free_vars(f);
    if (!fv.empty()) throw ScopeError("unbound variable " + *fv.begin());
}

void check_no_shadowing(const Formula& f) {
    std::vector<std::string> bound;
    walk_shadowing(f, bound);
}

Sentence parse_hyperltl(std::string_view text) {
    Formula f = parse_formula(text);
    Sentence s = split_prefix(f);
    if (!is_quantifier_free(s.matrix)) throw ScopeError("formula is not in prenex form");
    std::set<std::string> seen;
    for (const auto& q : s.prefix) {
        if (!seen.insert(q.var).second) throw ScopeError("duplicate quantified variable " + q.var);
    }
    check_closed(f);
    return s;
}

Formula parse_hyperctl(std::string_view text) {
    Formula f = parse_formula(text);
    check_no_shadowing(f);
    check_closed(f);
    return f;
}

FoFormula parse_fo(std::string_view text, bool allow_free) {
    FoFormula f = Parser<true>(text).parse_all();
    if (!allow_free) {
        const auto fv = free_vars(f);
        if (!fv.empty()) throw ScopeError("unbound variable " + *fv.begin());
    }
    return f;
}

std::string strip_comments(std::string_view text) {
    std::string out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find('\n', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view line = text.substr(i, j - i);
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string_view::npos || line[k] != '#') {
            out.append(line);
            out += '\n';
        }
        i = j + 1;
    }
    return out;
}

}  // namespace hyperlogic
