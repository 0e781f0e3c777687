#include "hyperlogic/fo_formula.hpp"

#include <algorithm>

namespace hyperlogic {

struct FoFormula::Node {
    FoKind kind;
    std::string prop;
    std::string var;
    std::string var2;
    FoFormula lhs;
    FoFormula rhs;
};

FoFormula::FoFormula() = default;

FoFormula::FoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

FoFormula FoFormula::make(FoKind kind, std::string prop, std::string var, std::string var2, FoFormula lhs,
                          FoFormula rhs) {
    return FoFormula(std::make_shared<const Node>(
        Node{kind, std::move(prop), std::move(var), std::move(var2), std::move(lhs), std::move(rhs)}));
}

FoKind FoFormula::kind() const noexcept { return node_ ? node_->kind : FoKind::True; }

const std::string& FoFormula::prop() const noexcept {
    static const std::string empty;
    return node_ ? node_->prop : empty;
}
const std::string& FoFormula::var() const noexcept {
    static const std::string empty;
    return node_ ? node_->var : empty;
}
const std::string& FoFormula::var2() const noexcept {
    static const std::string empty;
    return node_ ? node_->var2 : empty;
}
const FoFormula& FoFormula::lhs() const noexcept {
    static const FoFormula none;
    return node_ ? node_->lhs : none;
}
const FoFormula& FoFormula::rhs() const noexcept {
    static const FoFormula none;
    return node_ ? node_->rhs : none;
}

bool FoFormula::is_binary() const noexcept {
    switch (kind()) {
        case FoKind::And:
        case FoKind::Or:
        case FoKind::Implies:
        case FoKind::Iff:
            return true;
        default:
            return false;
    }
}

bool FoFormula::is_quantifier() const noexcept {
    return kind() == FoKind::Exists || kind() == FoKind::Forall;
}

bool operator==(const FoFormula& a, const FoFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case FoKind::True:
        case FoKind::False:
            return true;
        case FoKind::Atom:
            return a.prop() == b.prop() && a.var() == b.var();
        case FoKind::Le:
            return a.var() == b.var() && a.var2() == b.var2();
        case FoKind::Not:
            return a.lhs() == b.lhs();
        case FoKind::Exists:
        case FoKind::Forall:
            return a.var() == b.var() && a.lhs() == b.lhs();
        default:
            return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

namespace fo {
FoFormula top() { return FoFormula::make(FoKind::True, {}, {}, {}, {}, {}); }
FoFormula bottom() { return FoFormula::make(FoKind::False, {}, {}, {}, {}, {}); }
FoFormula atom(std::string prop, std::string var) {
    return FoFormula::make(FoKind::Atom, std::move(prop), std::move(var), {}, {}, {});
}
FoFormula le(std::string x, std::string y) {
    return FoFormula::make(FoKind::Le, {}, std::move(x), std::move(y), {}, {});
}
FoFormula neg(FoFormula f) { return FoFormula::make(FoKind::Not, {}, {}, {}, std::move(f), {}); }
FoFormula land(FoFormula a, FoFormula b) {
    return FoFormula::make(FoKind::And, {}, {}, {}, std::move(a), std::move(b));
}
FoFormula lor(FoFormula a, FoFormula b) {
    return FoFormula::make(FoKind::Or, {}, {}, {}, std::move(a), std::move(b));
}
FoFormula implies(FoFormula a, FoFormula b) {
    return FoFormula::make(FoKind::Implies, {}, {}, {}, std::move(a), std::move(b));
}
FoFormula iff(FoFormula a, FoFormula b) {
    return FoFormula::make(FoKind::Iff, {}, {}, {}, std::move(a), std::move(b));
}
FoFormula exists(std::string var, FoFormula body) {
    return FoFormula::make(FoKind::Exists, {}, std::move(var), {}, std::move(body), {});
}
FoFormula forall(std::string var, FoFormula body) {
    return FoFormula::make(FoKind::Forall, {}, std::move(var), {}, std::move(body), {});
}
}  // namespace fo

namespace {

void collect_free(const FoFormula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    auto note = [&](const std::string& v) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
    };
    switch (f.kind()) {
        case FoKind::True:
        case FoKind::False:
            return;
        case FoKind::Atom:
            note(f.var());
            return;
        case FoKind::Le:
            note(f.var());
            note(f.var2());
            return;
        case FoKind::Not:
            collect_free(f.lhs(), bound, out);
            return;
        case FoKind::Exists:
        case FoKind::Forall:
            bound.push_back(f.var());
            collect_free(f.lhs(), bound, out);
            bound.pop_back();
            return;
        default:
            collect_free(f.lhs(), bound, out);
            collect_free(f.rhs(), bound, out);
    }
}

bool has_quantifier(const FoFormula& f) {
    if (f.is_quantifier()) return true;
    if (f.kind() == FoKind::Not) return has_quantifier(f.lhs());
    if (f.is_binary()) return has_quantifier(f.lhs()) || has_quantifier(f.rhs());
    return false;
}

int precedence(FoKind k) {
    switch (k) {
        case FoKind::Iff: return 1;
        case FoKind::Implies: return 2;
        case FoKind::Or: return 3;
        case FoKind::And: return 4;
        case FoKind::Not: return 6;
        default: return 7;
    }
}

void print(const FoFormula& f, int ctx, bool tail, std::string& out) {
    const FoKind k = f.kind();
    const bool paren = f.is_quantifier() ? !tail : precedence(k) < ctx;
    if (paren) {
        out += '(';
        tail = true;
    }
    switch (k) {
        case FoKind::True: out += "true"; break;
        case FoKind::False: out += "false"; break;
        case FoKind::Atom: out += f.prop() + "(" + f.var() + ")"; break;
        case FoKind::Le: out += f.var() + " <= " + f.var2(); break;
        case FoKind::Not:
            out += '!';
            print(f.lhs(), 6, tail, out);
            break;
        case FoKind::Exists:
        case FoKind::Forall:
            out += k == FoKind::Exists ? "exists " : "forall ";
            out += f.var() + ". ";
            print(f.lhs(), 0, tail, out);
            break;
        default: {
            const int p = precedence(k);
            const bool ra = k == FoKind::Implies;
            const char* sym = k == FoKind::Iff ? " <-> " : k == FoKind::Implies ? " -> " : k == FoKind::Or ? " | " : " & ";
            print(f.lhs(), ra ? p + 1 : p, false, out);
            out += sym;
            print(f.rhs(), ra ? p : p + 1, tail, out);
        }
    }
    if (paren) out += ')';
}

}  // namespace

std::set<std::string> free_vars(const FoFormula& f) {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> props(const FoFormula& f) {
    std::set<std::string> out;
    if (f.kind() == FoKind::Atom) out.insert(f.prop());
    if (f.kind() == FoKind::Not || f.is_quantifier() || f.is_binary()) {
        auto l = props(f.lhs());
        out.insert(l.begin(), l.end());
    }
    if (f.is_binary()) {
        auto r = props(f.rhs());
        out.insert(r.begin(), r.end());
    }
    return out;
}

bool is_prenex(const FoFormula& f) {
    const FoFormula* cur = &f;
    while (cur->is_quantifier()) cur = &cur->lhs();
    return !has_quantifier(*cur);
}

std::string to_string(const FoFormula& f) {
    std::string out;
    print(f, 0, true, out);
    return out;
}

}  // namespace hyperlogic
