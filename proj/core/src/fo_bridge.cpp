#include "hyperlogic/fo_bridge.hpp"

#include <algorithm>

#include "hyperlogic/error.hpp"
#include "hyperlogic/hyperltl.hpp"
#include "hyperlogic/split.hpp"

namespace hyperlogic {

namespace {

bool eval_rec(const Word& w, const FoFormula& f, FoValuation& nu) {
    auto pos = [&](const std::string& v) {
        auto it = nu.find(v);
        if (it == nu.end()) throw EvalError("free variable " + v + " has no position");
        if (it->second >= w.size()) throw EvalError("variable " + v + " is mapped outside the word");
        return it->second;
    };
    switch (f.kind()) {
        case FoKind::True:
            return true;
        case FoKind::False:
            return false;
        case FoKind::Atom: {
            const std::size_t i = pos(f.var());
            auto idx = w.alphabet.index(f.prop());
            return idx && (w.letters[i] >> *idx & 1);
        }
        case FoKind::Le:
            return pos(f.var()) <= pos(f.var2());
        case FoKind::Not:
            return !eval_rec(w, f.lhs(), nu);
        case FoKind::And:
            return eval_rec(w, f.lhs(), nu) && eval_rec(w, f.rhs(), nu);
        case FoKind::Or:
            return eval_rec(w, f.lhs(), nu) || eval_rec(w, f.rhs(), nu);
        case FoKind::Implies:
            return !eval_rec(w, f.lhs(), nu) || eval_rec(w, f.rhs(), nu);
        case FoKind::Iff:
            return eval_rec(w, f.lhs(), nu) == eval_rec(w, f.rhs(), nu);
        case FoKind::Exists:
        case FoKind::Forall: {
            const bool exists = f.kind() == FoKind::Exists;
            auto saved = nu.find(f.var()) != nu.end() ? std::optional<std::size_t>(nu[f.var()]) : std::nullopt;
            bool r = !exists;
            for (std::size_t i = 0; i < w.size(); ++i) {
                nu[f.var()] = i;
                if (eval_rec(w, f.lhs(), nu) == exists) {
                    r = exists;
                    break;
                }
            }
            if (saved) nu[f.var()] = *saved;
            else nu.erase(f.var());
            return r;
        }
    }
    return false;
}

Formula translate(const FoFormula& f) {
    using namespace fml;
    switch (f.kind()) {
        case FoKind::True:
            return top();
        case FoKind::False:
            return bottom();
        case FoKind::Atom:
            return atom(f.prop(), f.var());
        case FoKind::Le:
            return eventually(land(atom(kMarker, f.var()), eventually(atom(kMarker, f.var2()))));
        case FoKind::Not:
            return neg(translate(f.lhs()));
        case FoKind::And:
            return land(translate(f.lhs()), translate(f.rhs()));
        case FoKind::Or:
            return lor(translate(f.lhs()), translate(f.rhs()));
        case FoKind::Implies:
            return implies(translate(f.lhs()), translate(f.rhs()));
        case FoKind::Iff:
            return iff(translate(f.lhs()), translate(f.rhs()));
        default:
            throw ScopeError("quantifier inside the matrix");
    }
}

// Marker time and time-0 letter of an encoded trace.
struct Encoded {
    std::size_t marker;
    Letter first;
};

Encoded decode(const LassoTrace& raw, Letter o) {
    const LassoTrace t = raw.canonical();
    if (t.loop != std::vector<Letter>{0}) throw EvalError("trace does not end in empty letters");
    std::optional<std::size_t> marker;
    for (std::size_t i = 0; i < t.stem.size(); ++i) {
        const Letter l = t.stem[i];
        if (l & o) {
            if (marker) throw EvalError("trace has more than one marker");
            marker = i;
        }
        if (i > 0 && (l & ~o)) throw EvalError("trace has ordinary letters after time 0");
    }
    if (!marker || *marker == 0) throw EvalError("trace has no marker after time 0");
    return {*marker, t.stem[0] & ~o};
}

LassoTrace encoded_trace(Letter first, std::size_t marker, Letter o) {
    std::vector<Letter> stem(marker + 1, 0);
    stem[0] = first;
    stem[marker] |= o;
    return LassoTrace(std::move(stem), {0});
}

// Rank of every trace's marker among all markers of t.
std::vector<std::size_t> marker_ranks(const std::vector<Encoded>& enc) {
    std::vector<std::size_t> pos;
    for (const auto& e : enc) pos.push_back(e.marker);
    std::vector<std::size_t> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw EvalError("two traces share a marker time");
    }
    std::vector<std::size_t> ranks;
    for (auto p : pos) {
        ranks.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin()));
    }
    return ranks;
}

std::vector<Encoded> decode_all(const TraceSet& t, Letter o) {
    std::vector<Encoded> enc;
    for (const auto& nt : t.traces) enc.push_back(decode(nt.trace, o));
    return enc;
}

Letter marker_bit(const Alphabet& a) {
    auto i = a.index(kMarker);
    if (!i) throw EvalError("alphabet has no marker proposition " + kMarker);
    return Letter{1} << *i;
}

}  // namespace

bool eval_fo(const Word& w, const FoFormula& phi, const FoValuation& nu) {
    FoValuation env = nu;
    for (const auto& v : free_vars(phi)) {
        if (!env.count(v)) throw EvalError("free variable " + v + " has no position");
    }
    return eval_rec(w, phi, env);
}

TraceSet encode_word(const Word& w, const StretchSpec& f) {
    if (w.alphabet.contains(kMarker)) throw EvalError("word alphabet already contains " + kMarker);
    std::vector<std::string> props = w.alphabet.props();
    props.push_back(kMarker);
    TraceSet t;
    t.alphabet = Alphabet(props);
    const Letter o = t.alphabet.bit(kMarker);
    std::size_t last = 0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        const std::size_t at = f(n);
        if (at == 0 || (n > 0 && at <= last)) throw EvalError("stretch must be positive and strictly increasing");
        last = at;
        t.add(encoded_trace(w.letters[n], at, o));
    }
    return t;
}

Sentence fo_to_hyperltl(const FoFormula& phi) {
    if (!is_prenex(phi)) throw ScopeError("first-order sentence is not in prenex form");
    if (!free_vars(phi).empty()) throw ScopeError("first-order formula has free variables");
    Sentence s;
    FoFormula f = phi;
    while (f.is_quantifier()) {
        s.prefix.push_back({f.kind() == FoKind::Exists ? Quant::Exists : Quant::Forall, f.var()});
        f = f.lhs();
    }
    s.matrix = translate(f);
    return s;
}

TraceSet stretch_set(const TraceSet& t, std::size_t n) {
    if (n == 0) throw EvalError("stretch factor must be positive");
    const Letter o = marker_bit(t.alphabet);
    const auto enc = decode_all(t, o);
    const auto ranks = marker_ranks(enc);
    TraceSet out;
    out.alphabet = t.alphabet;
    for (std::size_t i = 0; i < t.size(); ++i) {
        out.add(encoded_trace(enc[i].first, n * (ranks[i] + 1), o), t.traces[i].name);
    }
    return out;
}

std::map<std::string, LassoTrace> stretch_assignment(const TraceSet& t, const std::map<std::string, std::size_t>& pi,
                                                     std::size_t n) {
    const TraceSet s = stretch_set(t, n);
    std::map<std::string, LassoTrace> out;
    for (const auto& [v, i] : pi) {
        if (i >= s.size()) throw EvalError("assignment of " + v + " is outside the trace set");
        out.emplace(v, s[i]);
    }
    return out;
}

std::vector<LabelClass> label_classes(const std::vector<std::string>& props, const std::vector<std::string>& vars) {
    const std::size_t k = vars.size();
    const std::size_t bits = props.size() * k;
    if (bits > 20 || k > 8) throw EvalError("too many label classes to enumerate");

    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> r(k, 0);
    while (true) {
        std::vector<bool> used(k + 1, false);
        std::size_t top = 0;
        for (auto x : r) {
            used[x] = true;
            top = std::max(top, x + 1);
        }
        if (std::all_of(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(k == 0 ? 0 : top),
                        [](bool b) { return b; })) {
            orders.push_back(r);
        }
        std::size_t i = k;
        while (i > 0 && ++r[i - 1] == k) r[--i] = 0;
        if (i == 0) break;
    }

    std::vector<LabelClass> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        for (const auto& ord : orders) {
            LabelClass c;
            for (std::size_t b = 0; b < bits; ++b) {
                if (mask >> b & 1) c.labels.emplace_back(props[b % props.size()], vars[b / props.size()]);
            }
            for (std::size_t v = 0; v < k; ++v) c.rank[vars[v]] = ord[v];
            out.push_back(std::move(c));
        }
    }
    return out;
}

Formula class_formula(const LabelClass& c, const std::vector<std::string>& props,
                      const std::vector<std::string>& vars) {
    using namespace fml;
    std::vector<Formula> parts;
    for (const auto& v : vars) {
        for (const auto& p : props) {
            const bool in = std::find(c.labels.begin(), c.labels.end(), std::make_pair(p, v)) != c.labels.end();
            parts.push_back(in ? atom(p, v) : neg(atom(p, v)));
        }
    }
    for (const auto& u : vars) {
        for (const auto& v : vars) {
            if (u == v) continue;
            const Formula before = eventually(land(atom(kMarker, u), eventually(atom(kMarker, v))));
            parts.push_back(c.rank.at(u) <= c.rank.at(v) ? before : neg(before));
        }
    }
    return conj(parts);
}

std::map<std::string, LassoTrace> representative(const LabelClass& c, const Alphabet& alphabet, std::size_t n) {
    const Letter o = marker_bit(alphabet);
    std::map<std::string, LassoTrace> out;
    for (const auto& [v, r] : c.rank) {
        Letter first = 0;
        for (const auto& [p, u] : c.labels) {
            if (u == v) first |= alphabet.bit(p);
        }
        out.emplace(v, encoded_trace(first, n * (r + 1), o));
    }
    return out;
}

Formula simplify_qf(const Formula& psi) {
    if (!is_quantifier_free(psi)) throw EvalError("simplification needs a quantifier-free formula");
    auto ps = props(psi);
    if (ps.count(kDollar)) throw EvalError("formula mentions " + kDollar);
    ps.erase(kMarker);
    const std::vector<std::string> ap(ps.begin(), ps.end());
    const auto fv = free_vars(psi);
    const std::vector<std::string> vars(fv.begin(), fv.end());
    std::vector<std::string> alpha = ap;
    alpha.push_back(kMarker);
    const Alphabet alphabet(alpha);
    const std::size_t n = temporal_depth(psi) + 1;

    std::vector<Formula> cases;
    for (const auto& c : label_classes(ap, vars)) {
        if (eval_qf(psi, representative(c, alphabet, n), alphabet)) cases.push_back(class_formula(c, ap, vars));
    }
    return fml::disj(cases);
}

}  // namespace hyperlogic
