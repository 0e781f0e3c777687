#pragma once

// Ultimately periodic sequences `stem . loop^omega` and finite sets of them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlogic/error.hpp"

namespace hyperlogic {

template <class S>
struct Lasso {
    std::vector<S> stem;
    std::vector<S> loop;

    Lasso() = default;
    Lasso(std::vector<S> s, std::vector<S> l) : stem(std::move(s)), loop(std::move(l)) {
        if (loop.empty()) throw EvalError("lasso loop must be non-empty");
    }

    std::size_t size() const { return stem.size() + loop.size(); }

    const S& at(std::size_t i) const {
        if (i < stem.size()) return stem[i];
        return loop[(i - stem.size()) % loop.size()];
    }

    /// The sequence from position `j` on.
    Lasso suffix(std::size_t j) const {
        if (j <= stem.size()) return Lasso(std::vector<S>(stem.begin() + j, stem.end()), loop);
        const std::size_t r = (j - stem.size()) % loop.size();
        std::vector<S> l(loop.begin() + r, loop.end());
        l.insert(l.end(), loop.begin(), loop.begin() + r);
        return Lasso({}, std::move(l));
    }

    /// Unique representation of the infinite sequence: primitive loop and
    /// shortest stem. Two lassos denote the same sequence iff their canonical
    /// forms are equal.
    Lasso canonical() const {
        std::vector<S> l = loop;
        const std::size_t n = l.size();
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            bool periodic = true;
            for (std::size_t i = d; i < n && periodic; ++i) periodic = l[i] == l[i - d];
            if (periodic) {
                l.resize(d);
                break;
            }
        }
        std::vector<S> s = stem;
        while (!s.empty() && s.back() == l.back()) {
            s.pop_back();
            std::rotate(l.rbegin(), l.rbegin() + 1, l.rend());
        }
        return Lasso(std::move(s), std::move(l));
    }

    friend bool operator==(const Lasso&, const Lasso&) = default;
    friend auto operator<=>(const Lasso&, const Lasso&) = default;
};

/// A set of propositions, one bit per proposition of an Alphabet.
using Letter = std::uint64_t;
using LassoTrace = Lasso<Letter>;

/// Ordered list of at most 64 proposition names; position i is bit i of a Letter.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> props);

    const std::vector<std::string>& props() const { return props_; }
    std::size_t size() const { return props_.size(); }
    std::optional<std::size_t> index(const std::string& prop) const;
    bool contains(const std::string& prop) const { return index(prop).has_value(); }
    Letter bit(const std::string& prop) const;

    /// Letter text such as `{a b}`.
    std::string format(Letter l) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> props_;
};

struct NamedTrace {
    std::string name;
    LassoTrace trace;
};

struct TraceSet {
    Alphabet alphabet;
    std::vector<NamedTrace> traces;

    std::size_t size() const { return traces.size(); }
    bool empty() const { return traces.empty(); }
    const LassoTrace& operator[](std::size_t i) const { return traces[i].trace; }

    /// Adds a trace named `t<i>` (or `name` when given); names must stay unique.
    void add(LassoTrace t, std::string name = {});
};

/// Stem and period after which a product of lassos repeats.
struct Alignment {
    std::size_t stem = 0;
    std::size_t period = 1;

    std::size_t horizon() const { return stem + period; }
    friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// s = longest stem, p = lcm of the loop lengths. An empty list gives (0, 1).
template <class S>
Alignment align(std::span<const Lasso<S>* const> lassos) {
    Alignment a;
    for (const auto* l : lassos) {
        a.stem = std::max(a.stem, l->stem.size());
        a.period = std::lcm(a.period, l->loop.size());
    }
    return a;
}

template <class S>
Alignment align(const std::vector<Lasso<S>>& lassos) {
    std::vector<const Lasso<S>*> ptrs;
    for (const auto& l : lassos) ptrs.push_back(&l);
    return align<S>(std::span<const Lasso<S>* const>(ptrs));
}

inline Letter letter_at(const LassoTrace& t, std::size_t i) { return t.at(i); }

/// Text form `{a}{a b}({}{b})` of a trace over `alphabet`.
std::string format_trace(const LassoTrace& t, const Alphabet& alphabet);

}  // namespace hyperlogic
