#include "hyperlogic/compiled.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hyperlogic/error.hpp"

namespace hyperlogic {

class CoreBuilder {
public:
    explicit CoreBuilder(CoreFormula& out) : out_(out) {}

    std::uint32_t var_index(const std::string& v) {
        auto it = std::find(out_.vars_.begin(), out_.vars_.end(), v);
        if (it != out_.vars_.end()) return static_cast<std::uint32_t>(it - out_.vars_.begin());
        if (out_.vars_.size() >= 64) throw EvalError("formula uses more than 64 trace variables");
        out_.vars_.push_back(v);
        return static_cast<std::uint32_t>(out_.vars_.size() - 1);
    }

    std::uint32_t prop_index(const std::string& p) {
        auto it = std::find(out_.props_.begin(), out_.props_.end(), p);
        if (it != out_.props_.end()) return static_cast<std::uint32_t>(it - out_.props_.begin());
        out_.props_.push_back(p);
        return static_cast<std::uint32_t>(out_.props_.size() - 1);
    }

    std::uint32_t intern(CoreNode n) {
        auto key = std::make_tuple(static_cast<int>(n.op), n.a, n.b, n.prop, n.var);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(out_.nodes_.size());
        std::uint64_t mask = 0;
        bool quant = false;
        switch (n.op) {
            case Op::True:
                break;
            case Op::Atom:
                mask = std::uint64_t{1} << n.var;
                break;
            case Op::Not:
            case Op::Next:
                mask = out_.free_[n.a];
                quant = out_.quantified_[n.a];
                break;
            case Op::Or:
            case Op::Until:
                mask = out_.free_[n.a] | out_.free_[n.b];
                quant = out_.quantified_[n.a] || out_.quantified_[n.b];
                break;
            case Op::Exists:
            case Op::Forall:
                mask = out_.free_[n.a] & ~(std::uint64_t{1} << n.var);
                quant = true;
                break;
        }
        out_.nodes_.push_back(n);
        out_.free_.push_back(mask);
        out_.quantified_.push_back(quant);
        index_.emplace(key, id);
        return id;
    }

    std::uint32_t top() { return intern({Op::True}); }
    std::uint32_t neg(std::uint32_t a) {
        const CoreNode& n = out_.nodes_[a];
        if (n.op == Op::Not) return n.a;
        return intern({Op::Not, a});
    }
    std::uint32_t lor(std::uint32_t a, std::uint32_t b) { return intern({Op::Or, a, b}); }
    std::uint32_t land(std::uint32_t a, std::uint32_t b) {
        const auto na = neg(a);
        return neg(lor(na, neg(b)));
    }
    std::uint32_t until(std::uint32_t a, std::uint32_t b) { return intern({Op::Until, a, b}); }

    std::uint32_t lower(const Formula& f) {
        switch (f.kind()) {
            case Kind::True: return top();
            case Kind::False: return neg(top());
            case Kind::Atom:
                return intern({Op::Atom, 0, 0, prop_index(f.prop()), var_index(f.var())});
            case Kind::Not: return neg(lower(f.lhs()));
            case Kind::Or: {
                auto a = lower(f.lhs());
                return lor(a, lower(f.rhs()));
            }
            case Kind::And: {
                auto a = lower(f.lhs());
                return land(a, lower(f.rhs()));
            }
            case Kind::Implies: {
                auto a = lower(f.lhs());
                return lor(neg(a), lower(f.rhs()));
            }
            case Kind::Iff: {
                auto a = lower(f.lhs());
                auto b = lower(f.rhs());
                const auto both = land(a, b);
                const auto na = neg(a);
                return lor(both, land(na, neg(b)));
            }
            case Kind::Next: return intern({Op::Next, lower(f.lhs())});
            case Kind::Until: {
                auto a = lower(f.lhs());
                return until(a, lower(f.rhs()));
            }
            case Kind::Eventually: return until(top(), lower(f.lhs()));
            case Kind::Globally: return neg(until(top(), neg(lower(f.lhs()))));
            case Kind::Exists:
            case Kind::Forall: {
                const auto v = var_index(f.var());
                const auto body = lower(f.lhs());
                return intern({f.kind() == Kind::Exists ? Op::Exists : Op::Forall, body, 0, 0, v});
            }
        }
        return top();
    }

private:
    CoreFormula& out_;
    std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, std::uint32_t> index_;
};

CoreFormula CoreFormula::compile(const Formula& f, const std::vector<std::string>& var_order) {
    CoreFormula out;
    CoreBuilder b(out);
    for (const auto& v : var_order) b.var_index(v);
    out.root_ = b.lower(f);
    return out;
}

std::size_t CoreFormula::depth(std::uint32_t id) const {
    std::vector<std::size_t> d(id + 1, 0);
    for (std::uint32_t i = 0; i <= id; ++i) {
        const auto& n = nodes_[i];
        switch (n.op) {
            case Op::True:
            case Op::Atom: d[i] = 0; break;
            case Op::Not:
            case Op::Next:
            case Op::Exists:
            case Op::Forall: d[i] = 1 + d[n.a]; break;
            case Op::Or:
            case Op::Until: d[i] = 1 + std::max(d[n.a], d[n.b]); break;
        }
    }
    return d[id];
}

// Rendering recognizes the shapes produced by lowering so that dumps stay
// readable: !(!a | !b) prints as a & b, true U a as F a, !(true U !a) as G a.
Formula CoreFormula::to_formula(std::uint32_t id) const {
    const CoreNode& n = nodes_[id];
    switch (n.op) {
        case Op::True: return fml::top();
        case Op::Atom: return fml::atom(props_[n.prop], vars_[n.var]);
        case Op::Not: {
            const CoreNode& c = nodes_[n.a];
            if (c.op == Op::True) return fml::bottom();
            if (c.op == Op::Or && nodes_[c.a].op == Op::Not && nodes_[c.b].op == Op::Not) {
                return fml::land(to_formula(nodes_[c.a].a), to_formula(nodes_[c.b].a));
            }
            if (c.op == Op::Until && nodes_[c.a].op == Op::True && nodes_[c.b].op == Op::Not) {
                return fml::always(to_formula(nodes_[c.b].a));
            }
            return fml::neg(to_formula(n.a));
        }
        case Op::Or: return fml::lor(to_formula(n.a), to_formula(n.b));
        case Op::Next: return fml::next(to_formula(n.a));
        case Op::Until:
            if (nodes_[n.a].op == Op::True) return fml::eventually(to_formula(n.b));
            return fml::until(to_formula(n.a), to_formula(n.b));
        case Op::Exists: return fml::exists(vars_[n.var], to_formula(n.a));
        case Op::Forall: return fml::forall(vars_[n.var], to_formula(n.a));
    }
    return fml::top();
}

}  // namespace hyperlogic
