#include "hyperlogic/formula.hpp"

#include <algorithm>
#include <cassert>

namespace hyperlogic {

struct Formula::Node {
    Kind kind;
    std::string prop;
    std::string var;
    Formula lhs;
    Formula rhs;
};

Formula::Formula() : node_(nullptr) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::make(Kind kind, std::string prop, std::string var, Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const Node>(
        Node{kind, std::move(prop), std::move(var), std::move(lhs), std::move(rhs)}));
}

// A null node stands for `true`; this keeps default construction cheap and
// gives leaf nodes empty children without recursion.
Kind Formula::kind() const noexcept { return node_ ? node_->kind : Kind::True; }

const std::string& Formula::prop() const noexcept {
    static const std::string empty;
    return node_ ? node_->prop : empty;
}

const std::string& Formula::var() const noexcept {
    static const std::string empty;
    return node_ ? node_->var : empty;
}

const Formula& Formula::lhs() const noexcept {
    static const Formula none;
    return node_ ? node_->lhs : none;
}

const Formula& Formula::rhs() const noexcept {
    static const Formula none;
    return node_ ? node_->rhs : none;
}

bool Formula::is_binary() const noexcept {
    switch (kind()) {
        case Kind::And:
        case Kind::Or:
        case Kind::Implies:
        case Kind::Iff:
        case Kind::Until:
            return true;
        default:
            return false;
    }
}

bool Formula::is_unary() const noexcept {
    switch (kind()) {
        case Kind::Not:
        case Kind::Next:
        case Kind::Eventually:
        case Kind::Globally:
            return true;
        default:
            return false;
    }
}

bool Formula::is_quantifier() const noexcept {
    return kind() == Kind::Exists || kind() == Kind::Forall;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Kind::True:
        case Kind::False:
            return true;
        case Kind::Atom:
            return a.prop() == b.prop() && a.var() == b.var();
        case Kind::Exists:
        case Kind::Forall:
            return a.var() == b.var() && a.lhs() == b.lhs();
        default:
            break;
    }
    if (a.is_unary()) return a.lhs() == b.lhs();
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

namespace fml {

Formula top() { return Formula::make(Kind::True, {}, {}, {}, {}); }
Formula bottom() { return Formula::make(Kind::False, {}, {}, {}, {}); }
Formula atom(std::string prop, std::string var) {
    return Formula::make(Kind::Atom, std::move(prop), std::move(var), {}, {});
}
Formula neg(Formula f) { return Formula::make(Kind::Not, {}, {}, std::move(f), {}); }
Formula land(Formula a, Formula b) { return Formula::make(Kind::And, {}, {}, std::move(a), std::move(b)); }
Formula lor(Formula a, Formula b) { return Formula::make(Kind::Or, {}, {}, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) {
    return Formula::make(Kind::Implies, {}, {}, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) { return Formula::make(Kind::Iff, {}, {}, std::move(a), std::move(b)); }
Formula next(Formula f) { return Formula::make(Kind::Next, {}, {}, std::move(f), {}); }
Formula until(Formula a, Formula b) { return Formula::make(Kind::Until, {}, {}, std::move(a), std::move(b)); }
Formula eventually(Formula f) { return Formula::make(Kind::Eventually, {}, {}, std::move(f), {}); }
Formula always(Formula f) { return Formula::make(Kind::Globally, {}, {}, std::move(f), {}); }
Formula exists(std::string var, Formula body) {
    return Formula::make(Kind::Exists, {}, std::move(var), std::move(body), {});
}
Formula forall(std::string var, Formula body) {
    return Formula::make(Kind::Forall, {}, std::move(var), std::move(body), {});
}

Formula conj(const std::vector<Formula>& parts) {
    if (parts.empty()) return top();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = land(acc, parts[i]);
    return acc;
}

Formula disj(const std::vector<Formula>& parts) {
    if (parts.empty()) return bottom();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = lor(acc, parts[i]);
    return acc;
}

}  // namespace fml

Formula Sentence::to_formula() const {
    Formula f = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        f = it->quant == Quant::Exists ? fml::exists(it->var, f) : fml::forall(it->var, f);
    }
    return f;
}

Sentence split_prefix(const Formula& f) {
    Sentence s;
    const Formula* cur = &f;
    while (cur->is_quantifier()) {
        s.prefix.push_back({cur->kind() == Kind::Exists ? Quant::Exists : Quant::Forall, cur->var()});
        cur = &cur->lhs();
    }
    s.matrix = *cur;
    return s;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
        case Kind::True:
        case Kind::False:
            return;
        case Kind::Atom:
            if (std::find(bound.begin(), bound.end(), f.var()) == bound.end()) out.insert(f.var());
            return;
        case Kind::Exists:
        case Kind::Forall:
            bound.push_back(f.var());
            collect_free(f.lhs(), bound, out);
            bound.pop_back();
            return;
        default:
            collect_free(f.lhs(), bound, out);
            if (f.is_binary()) collect_free(f.rhs(), bound, out);
    }
}

template <typename Visit>
void walk(const Formula& f, Visit&& visit) {
    visit(f);
    if (f.is_unary() || f.is_quantifier()) {
        walk(f.lhs(), visit);
    } else if (f.is_binary()) {
        walk(f.lhs(), visit);
        walk(f.rhs(), visit);
    }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_vars(const Formula& f) {
    std::set<std::string> out;
    walk(f, [&](const Formula& g) {
        if (g.kind() == Kind::Atom || g.is_quantifier()) out.insert(g.var());
    });
    return out;
}

std::set<std::string> props(const Formula& f) {
    std::set<std::string> out;
    walk(f, [&](const Formula& g) {
        if (g.kind() == Kind::Atom) out.insert(g.prop());
    });
    return out;
}

bool is_quantifier_free(const Formula& f) {
    bool found = false;
    walk(f, [&](const Formula& g) { found = found || g.is_quantifier(); });
    return !found;
}

std::size_t temporal_depth(const Formula& f) {
    switch (f.kind()) {
        case Kind::True:
        case Kind::False:
        case Kind::Atom:
            return 0;
        case Kind::Next:
        case Kind::Eventually:
        case Kind::Globally:
            return 1 + temporal_depth(f.lhs());
        case Kind::Until:
            return 1 + std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
        case Kind::Not:
        case Kind::Exists:
        case Kind::Forall:
            return temporal_depth(f.lhs());
        default:
            return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
    }
}

std::size_t operator_depth(const Formula& f) {
    if (f.is_binary()) return 1 + std::max(operator_depth(f.lhs()), operator_depth(f.rhs()));
    if (f.is_unary() || f.is_quantifier()) return 1 + operator_depth(f.lhs());
    return 0;
}

// ---------------------------------------------------------------------------
// Printing
//
// Precedence (loosest first): <-> , -> , | , & , U , unary.  `U` and `->` are
// right-associative, the others left-associative. A quantifier body extends
// as far right as possible, so a quantifier is printed bare only when nothing
// follows it inside the enclosing parentheses.

namespace {

int precedence(Kind k) {
    switch (k) {
        case Kind::Iff: return 1;
        case Kind::Implies: return 2;
        case Kind::Or: return 3;
        case Kind::And: return 4;
        case Kind::Until: return 5;
        case Kind::Not:
        case Kind::Next:
        case Kind::Eventually:
        case Kind::Globally: return 6;
        default: return 7;
    }
}

const char* binary_symbol(Kind k) {
    switch (k) {
        case Kind::Iff: return " <-> ";
        case Kind::Implies: return " -> ";
        case Kind::Or: return " | ";
        case Kind::And: return " & ";
        case Kind::Until: return " U ";
        default: return " ? ";
    }
}

bool right_assoc(Kind k) { return k == Kind::Until || k == Kind::Implies; }

void print(const Formula& f, int ctx, bool tail, std::string& out) {
    const Kind k = f.kind();
    bool paren;
    if (f.is_quantifier()) {
        paren = !tail;
    } else {
        paren = precedence(k) < ctx;
    }
    if (paren) {
        out += '(';
        tail = true;
    }
    switch (k) {
        case Kind::True: out += "true"; break;
        case Kind::False: out += "false"; break;
        case Kind::Atom:
            out += f.prop();
            out += '[';
            out += f.var();
            out += ']';
            break;
        case Kind::Not:
            out += '!';
            print(f.lhs(), 6, tail, out);
            break;
        case Kind::Next:
        case Kind::Eventually:
        case Kind::Globally:
            out += k == Kind::Next ? "X " : (k == Kind::Eventually ? "F " : "G ");
            print(f.lhs(), 6, tail, out);
            break;
        case Kind::Exists:
        case Kind::Forall:
            out += k == Kind::Exists ? "exists " : "forall ";
            out += f.var();
            out += ". ";
            print(f.lhs(), 0, tail, out);
            break;
        default: {
            const int p = precedence(k);
            const bool ra = right_assoc(k);
            print(f.lhs(), ra ? p + 1 : p, false, out);
            out += binary_symbol(k);
            print(f.rhs(), ra ? p : p + 1, tail, out);
        }
    }
    if (paren) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, 0, true, out);
    return out;
}

std::string to_string(const Sentence& s) { return to_string(s.to_formula()); }

std::string to_string(Quant q) { return q == Quant::Exists ? "exists" : "forall"; }

}  // namespace hyperlogic
