#include "hyperlogic/expansion.hpp"

#include "hyperlogic/error.hpp"

namespace hyperlogic {

bool ExpansionTable::value(std::uint32_t node, std::size_t j) const {
    const auto& v = values_.at(node);
    if (v.empty()) throw EvalError("subformula was not tabulated");
    if (j >= align_.horizon()) j = align_.stem + (j - align_.stem) % align_.period;
    return v[j] != 0;
}

std::vector<Letter> prop_bits(const CoreFormula& core, const Alphabet& alphabet, bool missing_is_false) {
    std::vector<Letter> bits;
    for (const auto& p : core.props()) {
        auto i = alphabet.index(p);
        if (!i) {
            if (!missing_is_false) throw EvalError("proposition " + p + " is not in the alphabet");
            bits.push_back(0);
        } else {
            bits.push_back(Letter{1} << *i);
        }
    }
    return bits;
}

ExpansionTable build_expansion_bits(const CoreFormula& core, std::span<const LassoTrace* const> traces,
                                    std::span<const Letter> bits, const Alignment* explicit_align) {
    ExpansionTable t;
    t.core_ = &core;
    std::vector<const LassoTrace*> bound;
    for (const auto* tr : traces) {
        if (tr) bound.push_back(tr);
    }
    t.align_ = align<Letter>(std::span<const LassoTrace* const>(bound));
    if (explicit_align) {
        if (explicit_align->stem < t.align_.stem || explicit_align->period == 0 ||
            explicit_align->period % t.align_.period != 0) {
            throw EvalError("alignment does not fit the bound traces");
        }
        t.align_ = *explicit_align;
    }
    const std::size_t s = t.align_.stem;
    const std::size_t n = t.align_.horizon();
    const auto& nodes = core.nodes();
    const std::uint32_t root = core.root();
    if (core.has_quantifier(root)) throw EvalError("expansion needs a quantifier-free formula");

    std::vector<bool> reach(nodes.size(), false);
    reach[root] = true;
    for (std::uint32_t i = root + 1; i-- > 0;) {
        if (!reach[i]) continue;
        const auto& nd = nodes[i];
        if (nd.op == Op::Not || nd.op == Op::Next) reach[nd.a] = true;
        if (nd.op == Op::Or || nd.op == Op::Until) reach[nd.a] = reach[nd.b] = true;
    }

    t.values_.assign(nodes.size(), {});
    auto next = [&](std::size_t j) { return j + 1 < n ? j + 1 : s; };
    for (std::uint32_t i = 0; i <= root; ++i) {
        if (!reach[i]) continue;
        const auto& nd = nodes[i];
        auto& out = t.values_[i];
        out.assign(n, 0);
        switch (nd.op) {
            case Op::True:
                std::fill(out.begin(), out.end(), 1);
                break;
            case Op::Atom: {
                const LassoTrace* tr = nd.var < traces.size() ? traces[nd.var] : nullptr;
                if (!tr) throw EvalError("unbound variable " + core.vars()[nd.var]);
                for (std::size_t j = 0; j < n; ++j) out[j] = (tr->at(j) & bits[nd.prop]) != 0;
                break;
            }
            case Op::Not: {
                const auto& a = t.values_[nd.a];
                for (std::size_t j = 0; j < n; ++j) out[j] = !a[j];
                break;
            }
            case Op::Or: {
                const auto& a = t.values_[nd.a];
                const auto& b = t.values_[nd.b];
                for (std::size_t j = 0; j < n; ++j) out[j] = a[j] || b[j];
                break;
            }
            case Op::Next: {
                const auto& a = t.values_[nd.a];
                for (std::size_t j = 0; j < n; ++j) out[j] = a[next(j)];
                break;
            }
            case Op::Until: {
                const auto& a = t.values_[nd.a];
                const auto& b = t.values_[nd.b];
                // Least fixpoint on the loop: the first backward pass is exact
                // at position s, the second propagates it around the cycle.
                for (int pass = 0; pass < 2; ++pass) {
                    for (std::size_t j = n; j-- > s;) out[j] = b[j] || (a[j] && out[next(j)]);
                }
                for (std::size_t j = s; j-- > 0;) out[j] = b[j] || (a[j] && out[j + 1]);
                break;
            }
            case Op::Exists:
            case Op::Forall:
                throw EvalError("expansion needs a quantifier-free formula");
        }
    }
    return t;
}

ExpansionTable build_expansion(const CoreFormula& core, std::span<const LassoTrace* const> traces,
                               const Alphabet& alphabet) {
    const auto bits = prop_bits(core, alphabet);
    return build_expansion_bits(core, traces, bits, nullptr);
}

ExpansionTable build_expansion(const CoreFormula& core, std::span<const LassoTrace* const> traces,
                               const Alphabet& alphabet, const Alignment& a) {
    const auto bits = prop_bits(core, alphabet);
    return build_expansion_bits(core, traces, bits, &a);
}

}  // namespace hyperlogic
