#pragma once

// Fixed-seed random instance generators for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperlogic/formula.hpp"
#include "hyperlogic/kripke.hpp"
#include "hyperlogic/lasso.hpp"

namespace gen {

using namespace hyperlogic;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
    std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

    /// Quantifier-free formula with nesting depth at most `depth` over the
    /// given propositions and variables.
    Formula qf(std::size_t depth, const std::vector<std::string>& props, const std::vector<std::string>& vars) {
        if (depth == 0 || below(5) == 0) {
            if (below(8) == 0) return coin() ? fml::top() : fml::bottom();
            return fml::atom(pick(props), pick(vars));
        }
        auto sub = [&] { return qf(depth - 1, props, vars); };
        switch (below(10)) {
        case 0: return fml::neg(sub());
        case 1: return fml::land(sub(), sub());
        case 2: return fml::lor(sub(), sub());
        case 3: return fml::implies(sub(), sub());
        case 4: return fml::iff(sub(), sub());
        case 5: return fml::next(sub());
        case 6:
        case 7: return fml::until(sub(), sub());
        case 8: return fml::eventually(sub());
        default: return fml::always(sub());
        }
    }

    /// Lasso over `num_props` propositions with stem + loop <= max_size.
    LassoTrace lasso(std::size_t num_props, std::size_t max_size) {
        const std::size_t loop = range(1, max_size);
        const std::size_t stem = below(max_size - loop + 1);
        auto letter = [&] { return static_cast<Letter>(below(std::size_t{1} << num_props)); };
        std::vector<Letter> s(stem);
        std::vector<Letter> l(loop);
        for (auto& x : s) x = letter();
        for (auto& x : l) x = letter();
        return LassoTrace(std::move(s), std::move(l));
    }

    TraceSet trace_set(const Alphabet& alphabet, std::size_t max_traces, std::size_t max_size) {
        TraceSet t;
        t.alphabet = alphabet;
        const std::size_t n = range(1, max_traces);
        for (std::size_t i = 0; i < n; ++i) t.add(lasso(alphabet.size(), max_size));
        return t;
    }

    Sentence sentence(std::size_t num_vars, std::size_t depth, const std::vector<std::string>& props) {
        Sentence s;
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < num_vars; ++i) {
            vars.push_back("p" + std::to_string(i));
            s.prefix.push_back({coin() ? Quant::Exists : Quant::Forall, vars.back()});
        }
        s.matrix = qf(depth, props, vars);
        return s;
    }

    /// Total Kripke structure with 1..max_vertices vertices and random labels.
    KripkeStructure kripke(const Alphabet& alphabet, std::size_t max_vertices) {
        KripkeStructure k(alphabet);
        const std::size_t n = range(1, max_vertices);
        for (std::size_t v = 0; v < n; ++v) {
            k.add_vertex("v" + std::to_string(v), static_cast<Letter>(below(std::size_t{1} << alphabet.size())));
        }
        for (VertexId v = 0; v < n; ++v) {
            std::vector<bool> used(n, false);
            const std::size_t deg = range(1, std::min<std::size_t>(n, 2));
            for (std::size_t e = 0; e < deg; ++e) {
                const auto w = static_cast<VertexId>(below(n));
                if (used[w]) continue;
                used[w] = true;
                k.add_edge(v, w);
            }
        }
        k.set_initial(0);
        return k;
    }

    /// Closed formula with quantifiers anywhere; `depth` bounds the operator
    /// nesting below each quantifier and at most `max_vars` paths are bound.
    Formula ctl(std::size_t depth, const std::vector<std::string>& props, std::size_t max_vars) {
        std::vector<std::string> scope;
        return ctl_rec(depth, props, scope, max_vars);
    }

private:
    Formula ctl_rec(std::size_t depth, const std::vector<std::string>& props, std::vector<std::string>& scope,
                    std::size_t max_vars) {
        const bool can_bind = scope.size() < max_vars;
        if (scope.empty() || (can_bind && below(4) == 0)) {
            const std::string v = "p" + std::to_string(scope.size());
            scope.push_back(v);
            Formula body = ctl_rec(depth, props, scope, max_vars);
            scope.pop_back();
            return coin() ? fml::exists(v, body) : fml::forall(v, body);
        }
        if (depth == 0 || below(4) == 0) return fml::atom(pick(props), pick(scope));
        auto sub = [&] { return ctl_rec(depth - 1, props, scope, max_vars); };
        switch (below(8)) {
        case 0: return fml::neg(sub());
        case 1: return fml::land(sub(), sub());
        case 2: return fml::lor(sub(), sub());
        case 3: return fml::next(sub());
        case 4:
        case 5: return fml::until(sub(), sub());
        case 6: return fml::eventually(sub());
        default: return fml::always(sub());
        }
    }

    std::mt19937_64 eng_;
};

}  // namespace gen
