#include "hyperlogic/prenex.hpp"

#include <map>
#include <set>
#include <vector>

#include "hyperlogic/error.hpp"

namespace hyperlogic {

namespace {

struct Block {
    Quant quant;
    std::vector<std::string> vars;
};

struct Prenexed {
    std::vector<Block> blocks;
    Formula matrix;
};

Formula expand_quantified_iff(const Formula& f) {
    if (is_quantifier_free(f)) return f;
    switch (f.kind()) {
        case Kind::Not: return fml::neg(expand_quantified_iff(f.lhs()));
        case Kind::And: return fml::land(expand_quantified_iff(f.lhs()), expand_quantified_iff(f.rhs()));
        case Kind::Or: return fml::lor(expand_quantified_iff(f.lhs()), expand_quantified_iff(f.rhs()));
        case Kind::Implies:
            return fml::implies(expand_quantified_iff(f.lhs()), expand_quantified_iff(f.rhs()));
        case Kind::Iff: {
            Formula a = expand_quantified_iff(f.lhs());
            Formula b = expand_quantified_iff(f.rhs());
            return fml::lor(fml::land(a, b), fml::land(fml::neg(a), fml::neg(b)));
        }
        case Kind::Exists: return fml::exists(f.var(), expand_quantified_iff(f.lhs()));
        case Kind::Forall: return fml::forall(f.var(), expand_quantified_iff(f.lhs()));
        default:
            throw ScopeError("quantifier below a temporal operator cannot be moved to the prefix");
    }
}

class Renamer {
public:
    explicit Renamer(const Formula& f) : avoid_(all_vars(f)) {}

    Formula run(const Formula& f) { return go(f); }

private:
    std::string fresh(const std::string& base) {
        if (!binders_.count(base)) return base;
        for (std::size_t k = 1;; ++k) {
            std::string cand = base + "_" + std::to_string(k);
            if (!binders_.count(cand) && !avoid_.count(cand)) return cand;
        }
    }

    Formula go(const Formula& f) {
        switch (f.kind()) {
            case Kind::True:
            case Kind::False:
                return f;
            case Kind::Atom: {
                auto it = scope_.find(f.var());
                if (it == scope_.end() || it->second.empty()) return f;
                return fml::atom(f.prop(), it->second.back());
            }
            case Kind::Exists:
            case Kind::Forall: {
                std::string name = fresh(f.var());
                binders_.insert(name);
                avoid_.insert(name);
                scope_[f.var()].push_back(name);
                Formula body = go(f.lhs());
                scope_[f.var()].pop_back();
                return f.kind() == Kind::Exists ? fml::exists(name, body) : fml::forall(name, body);
            }
            default:
                if (f.is_unary()) return Formula::make(f.kind(), {}, {}, go(f.lhs()), {});
                // Sequenced so that names are assigned left to right.
                Formula l = go(f.lhs());
                Formula r = go(f.rhs());
                return Formula::make(f.kind(), {}, {}, std::move(l), std::move(r));
        }
    }

    std::set<std::string> avoid_;
    std::set<std::string> binders_;
    std::map<std::string, std::vector<std::string>> scope_;
};

void push_var(std::vector<Block>& blocks, Quant q, const std::string& v) {
    if (blocks.empty() || blocks.back().quant != q) blocks.push_back({q, {}});
    blocks.back().vars.push_back(v);
}

std::vector<Block> interleave(const std::vector<Prenexed>& parts, Quant start) {
    std::vector<std::size_t> next(parts.size(), 0);
    std::vector<Block> out;
    Quant cur = start;
    for (;;) {
        bool remaining = false;
        Block block{cur, {}};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (next[i] < parts[i].blocks.size() && parts[i].blocks[next[i]].quant == cur) {
                const auto& vs = parts[i].blocks[next[i]].vars;
                block.vars.insert(block.vars.end(), vs.begin(), vs.end());
                ++next[i];
            }
            remaining = remaining || next[i] < parts[i].blocks.size();
        }
        if (!block.vars.empty()) out.push_back(std::move(block));
        if (!remaining) break;
        cur = dual(cur);
    }
    return out;
}

Prenexed merge(const std::vector<Prenexed>& parts, bool conjunction) {
    Prenexed out;
    std::vector<Formula> matrices;
    for (const auto& p : parts) matrices.push_back(p.matrix);
    out.matrix = conjunction ? fml::conj(matrices) : fml::disj(matrices);

    auto from_e = interleave(parts, Quant::Exists);
    auto from_a = interleave(parts, Quant::Forall);
    if (from_e.size() != from_a.size()) {
        out.blocks = from_e.size() < from_a.size() ? std::move(from_e) : std::move(from_a);
        return out;
    }
    Quant first = Quant::Exists;
    for (const auto& p : parts) {
        if (!p.blocks.empty()) {
            first = p.blocks.front().quant;
            break;
        }
    }
    out.blocks = first == Quant::Exists ? std::move(from_e) : std::move(from_a);
    return out;
}

Prenexed go(const Formula& f, bool negated);

// Collects the operands of a chain of same-kind connectives, tracking the
// polarity each operand is reached with.
void collect(const Formula& f, bool negated, bool conjunction, std::vector<Prenexed>& out) {
    if (!is_quantifier_free(f)) {
        const Kind k = f.kind();
        if (k == Kind::Not) {
            collect(f.lhs(), !negated, conjunction, out);
            return;
        }
        const bool is_and = k == Kind::And;
        const bool is_or = k == Kind::Or;
        const bool is_imp = k == Kind::Implies;
        if (is_and || is_or || is_imp) {
            const bool effective_and = is_imp ? negated : (is_and != negated);
            if (effective_and == conjunction) {
                collect(f.lhs(), is_imp ? !negated : negated, conjunction, out);
                collect(f.rhs(), negated, conjunction, out);
                return;
            }
        }
    }
    out.push_back(go(f, negated));
}

Prenexed go(const Formula& f, bool negated) {
    if (is_quantifier_free(f)) return {{}, negated ? fml::neg(f) : f};
    switch (f.kind()) {
        case Kind::Not:
            return go(f.lhs(), !negated);
        case Kind::Exists:
        case Kind::Forall: {
            Quant q = f.kind() == Kind::Exists ? Quant::Exists : Quant::Forall;
            if (negated) q = dual(q);
            Prenexed inner = go(f.lhs(), negated);
            std::vector<Block> blocks;
            push_var(blocks, q, f.var());
            for (const auto& b : inner.blocks) {
                for (const auto& v : b.vars) push_var(blocks, b.quant, v);
            }
            inner.blocks = std::move(blocks);
            return inner;
        }
        case Kind::And:
        case Kind::Or:
        case Kind::Implies: {
            const bool is_imp = f.kind() == Kind::Implies;
            const bool conjunction = is_imp ? negated : ((f.kind() == Kind::And) != negated);
            std::vector<Prenexed> parts;
            collect(f.lhs(), is_imp ? !negated : negated, conjunction, parts);
            collect(f.rhs(), negated, conjunction, parts);
            return merge(parts, conjunction);
        }
        default:
            throw ScopeError("quantifier below a temporal operator cannot be moved to the prefix");
    }
}

}  // namespace

Sentence to_prenex(const Formula& f) {
    const auto fv = free_vars(f);
    if (!fv.empty()) throw ScopeError("component is not closed: unbound variable " + *fv.begin());
    Formula expanded = expand_quantified_iff(f);
    Formula renamed = Renamer(expanded).run(expanded);
    Prenexed p = go(renamed, false);
    Sentence s;
    for (const auto& b : p.blocks) {
        for (const auto& v : b.vars) s.prefix.push_back({b.quant, v});
    }
    s.matrix = p.matrix;
    return s;
}

AlternationClass classify(const Sentence& s) {
    AlternationClass c;
    for (std::size_t i = 0; i < s.prefix.size(); ++i) {
        if (i == 0 || s.prefix[i].quant != s.prefix[i - 1].quant) ++c.level;
    }
    if (!s.prefix.empty()) c.polarity = s.prefix.front().quant;
    return c;
}

std::string to_string(const AlternationClass& c) {
    if (c.level == 0) return "Sigma_0/Pi_0";
    return (c.polarity == Quant::Exists ? "Sigma_" : "Pi_") + std::to_string(c.level);
}

}  // namespace hyperlogic
