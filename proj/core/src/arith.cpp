#include "hyperlogic/arith.hpp"

#include <cctype>
#include <map>
#include <set>

#include "hyperlogic/constructions.hpp"
#include "hyperlogic/error.hpp"
#include "hyperlogic/parser.hpp"

namespace hyperlogic {

namespace {

struct SExpr {
    std::string atom;
    std::vector<SExpr> list;
    bool is_list = false;
    std::size_t pos = 0;
};

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    SExpr read() {
        skip();
        if (i_ >= text_.size()) throw ParseError("unexpected end of input", i_);
        SExpr e;
        e.pos = i_;
        if (text_[i_] == '(') {
            ++i_;
            e.is_list = true;
            while (true) {
                skip();
                if (i_ >= text_.size()) throw ParseError("missing ')'", i_);
                if (text_[i_] == ')') {
                    ++i_;
                    break;
                }
                e.list.push_back(read());
            }
            return e;
        }
        if (text_[i_] == ')') throw ParseError("unexpected ')'", i_);
        while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
            e.atom += text_[i_++];
        }
        if (e.atom.empty()) throw ParseError(std::string("unexpected character '") + text_[i_] + "'", i_);
        return e;
    }

    void expect_end() {
        skip();
        if (i_ < text_.size()) throw ParseError("trailing input", i_);
    }

private:
    void skip() {
        while (i_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
                ++i_;
            } else if (text_[i_] == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') ++i_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

class Checker {
public:
    explicit Checker(const std::vector<std::string>& third) {
        for (const auto& t : third) {
            if (!third_.insert(t).second) throw ScopeError("duplicate third-order name " + t);
        }
    }

    ArithFormula convert(const SExpr& e) {
        if (!e.is_list || e.list.empty() || e.list.front().is_list) throw ParseError("expected (operator ...)", e.pos);
        const std::string& op = e.list.front().atom;
        const std::size_t n = e.list.size() - 1;
        auto arg = [&](std::size_t i) -> const std::string& {
            const SExpr& a = e.list[i];
            if (a.is_list) throw ParseError("expected a variable", a.pos);
            return a.atom;
        };
        auto arity = [&](std::size_t want) {
            if (n != want) throw ParseError(op + " takes " + std::to_string(want) + " arguments", e.pos);
        };
        ArithFormula f;
        if (op == "exists" || op == "forall") {
            arity(3);
            f.kind = op == "exists" ? ArithFormula::Kind::Exists : ArithFormula::Kind::Forall;
            const std::string& sort = arg(1);
            if (sort != "num" && sort != "set") throw ParseError("sort must be num or set", e.list[1].pos);
            f.sort = sort == "num" ? Sort::Num : Sort::Set;
            const std::string& v = arg(2);
            if (env_.count(v) || third_.count(v)) throw ScopeError("variable " + v + " shadows an outer name");
            env_[v] = f.sort;
            f.args = {v};
            f.kids.push_back(convert(e.list[3]));
            env_.erase(v);
            return f;
        }
        if (op == "not") {
            arity(1);
            f.kind = ArithFormula::Kind::Not;
            f.kids.push_back(convert(e.list[1]));
            return f;
        }
        if (op == "and" || op == "or" || op == "implies") {
            if (op == "implies") arity(2);
            if (n < 2) throw ParseError(op + " takes at least 2 arguments", e.pos);
            f.kind = op == "and" ? ArithFormula::Kind::And
                     : op == "or" ? ArithFormula::Kind::Or
                                  : ArithFormula::Kind::Implies;
            for (std::size_t i = 1; i <= n; ++i) f.kids.push_back(convert(e.list[i]));
            return f;
        }
        if (op == "mem") {
            arity(2);
            const std::string& x = arg(1);
            const std::string& y = arg(2);
            if (third_.count(y)) {
                require(x, Sort::Set);
                f.kind = ArithFormula::Kind::MemThird;
            } else {
                require(x, Sort::Num);
                require(y, Sort::Set);
                f.kind = ArithFormula::Kind::Mem;
            }
            f.args = {x, y};
            return f;
        }
        if (op == "lt" || op == "add" || op == "mul") {
            arity(op == "lt" ? 2 : 3);
            f.kind = op == "lt" ? ArithFormula::Kind::Lt : op == "add" ? ArithFormula::Kind::Add : ArithFormula::Kind::Mul;
            for (std::size_t i = 1; i <= n; ++i) {
                require(arg(i), Sort::Num);
                f.args.push_back(arg(i));
            }
            return f;
        }
        throw ParseError("unknown operator " + op, e.pos);
    }

private:
    void require(const std::string& v, Sort s) {
        auto it = env_.find(v);
        if (it == env_.end()) {
            throw ScopeError(third_.count(v) ? v + " may only appear as the right operand of mem"
                                             : "unbound variable " + v);
        }
        if (it->second != s) throw ScopeError("variable " + v + " has the wrong sort");
    }

    std::set<std::string> third_;
    std::map<std::string, Sort> env_;
};

using namespace fml;

class Translator {
public:
    explicit Translator(const std::vector<std::string>& third) {
        for (std::size_t i = 0; i < third.size(); ++i) prop_[third[i]] = "a" + std::to_string(i + 1);
    }

    Formula go(const ArithFormula& f) {
        using K = ArithFormula::Kind;
        switch (f.kind) {
            case K::Exists:
            case K::Forall: {
                const std::string p = path(f.args[0]);
                Formula guard = next(atom("pset", p));
                if (f.sort == Sort::Num) {
                    guard = land(guard, next(until(atom("zero", p), land(atom("one", p), next(always(atom("zero", p)))))));
                }
                const Formula body = go(f.kids[0]);
                return f.kind == K::Exists ? exists(p, land(guard, body)) : forall(p, implies(guard, body));
            }
            case K::Not:
                return neg(go(f.kids[0]));
            case K::And:
            case K::Or: {
                std::vector<Formula> parts;
                for (const auto& k : f.kids) parts.push_back(go(k));
                return f.kind == K::And ? conj(parts) : disj(parts);
            }
            case K::Implies:
                return implies(go(f.kids[0]), go(f.kids[1]));
            case K::MemThird:
                return next(atom(prop_.at(f.args[1]), path(f.args[0])));
            case K::Mem:
                return eventually(land(atom("one", path(f.args[0])), atom("one", path(f.args[1]))));
            case K::Lt:
                return eventually(land(atom("one", path(f.args[0])), next(eventually(atom("one", path(f.args[1]))))));
            case K::Add:
            case K::Mul: {
                const std::string op = "op" + std::to_string(++ops_);
                return exists(op, conj({next(atom(f.kind == K::Add ? "add" : "mult", op)),
                                        eventually(land(atom("argl", op), atom("one", path(f.args[0])))),
                                        eventually(land(atom("argr", op), atom("one", path(f.args[1])))),
                                        eventually(land(atom("res", op), atom("one", path(f.args[2]))))}));
            }
        }
        throw EvalError("unreachable arithmetic node");
    }

private:
    static std::string path(const std::string& v) { return "p_" + v; }

    std::map<std::string, std::string> prop_;
    std::size_t ops_ = 0;
};

// Restricts quantifiers to traces that carry an operation from position 1
// on, and evaluates quantifier-free parts one step later.
Formula relativize_op(const Formula& f) {
    if (is_quantifier_free(f)) return next(f);
    if (f.is_quantifier()) {
        const Formula guard = next(lor(atom("add", f.var()), atom("mult", f.var())));
        const Formula body = relativize_op(f.lhs());
        return f.kind() == Kind::Exists ? exists(f.var(), land(guard, body)) : forall(f.var(), implies(guard, body));
    }
    if (f.kind() == Kind::Not) return neg(relativize_op(f.lhs()));
    if (f.is_binary() && f.kind() != Kind::Until) {
        return Formula::make(f.kind(), "", "", relativize_op(f.lhs()), relativize_op(f.rhs()));
    }
    throw EvalError("quantifier below a temporal operator");
}

}  // namespace

ArithSentence parse_arith(std::string_view text) {
    Reader r(text);
    const SExpr top = r.read();
    r.expect_end();
    if (!top.is_list || top.list.size() != 3 || top.list[0].is_list || top.list[0].atom != "third" ||
        !top.list[1].is_list) {
        throw ParseError("expected (third (X1 ...) body)", top.pos);
    }
    ArithSentence s;
    for (const auto& n : top.list[1].list) {
        if (n.is_list) throw ParseError("expected a third-order name", n.pos);
        s.third.push_back(n.atom);
    }
    Checker c(s.third);
    s.body = c.convert(top.list[2]);
    return s;
}

Formula translate_arith_body(const ArithSentence& s) {
    Translator t(s.third);
    return t.go(s.body);
}

Formula arith_constraints(std::size_t num_third) {
    std::vector<Formula> same;
    for (std::size_t i = 1; i <= num_third; ++i) {
        const std::string a = "a" + std::to_string(i);
        same.push_back(always(iff(atom(a, "p"), atom(a, "q"))));
    }
    const Formula same_labelling = forall(
        "p", forall("q", implies(next(always(conj({atom("pset", "p"), atom("pset", "q"),
                                                    iff(atom("one", "p"), atom("one", "q"))}))),
                                 conj(same))));
    std::vector<Formula> parts{gen_phiset(), same_labelling};
    for (const auto& f : phiop_parts().all()) parts.push_back(relativize_op(f));
    return conj(parts);
}

Formula arith_to_hyperctl(const ArithSentence& s) {
    return land(arith_constraints(s.third.size()), translate_arith_body(s));
}

}  // namespace hyperlogic
