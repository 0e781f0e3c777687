#include "hyperlogic/split.hpp"

namespace hyperlogic {

namespace {

// b for a trace of shape (ordinary)^b {dollar}^omega, if it has that shape.
std::optional<std::size_t> left_bound(const LassoTrace& raw, Letter dollar) {
    const LassoTrace t = raw.canonical();
    if (t.loop.size() != 1 || t.loop.front() != dollar) return std::nullopt;
    for (Letter l : t.stem) {
        if (l & dollar) return std::nullopt;
    }
    return t.stem.size();
}

// b for a trace of shape {dollar}^b (ordinary)^omega, if it has that shape.
std::optional<std::size_t> right_bound(const LassoTrace& raw, Letter dollar) {
    const LassoTrace t = raw.canonical();
    std::size_t b = 0;
    while (b < t.stem.size() && t.stem[b] == dollar) ++b;
    for (std::size_t i = b; i < t.stem.size(); ++i) {
        if (t.stem[i] & dollar) return std::nullopt;
    }
    for (Letter l : t.loop) {
        if (l & dollar) return std::nullopt;
    }
    return b;
}

}  // namespace

std::optional<std::size_t> is_bounded(const TraceSet& t) {
    auto idx = t.alphabet.index(kDollar);
    if (!idx || t.empty()) return std::nullopt;
    const Letter dollar = Letter{1} << *idx;
    std::optional<std::size_t> b;
    for (const auto& nt : t.traces) {
        auto bt = left_bound(nt.trace, dollar);
        if (!bt || *bt == 0) return std::nullopt;
        if (b && *b != *bt) return std::nullopt;
        b = bt;
    }
    return b;
}

std::optional<SplitView> split_view(const TraceSet& t) {
    auto idx = t.alphabet.index(kDollar);
    if (!idx || t.empty()) return std::nullopt;
    const Letter dollar = Letter{1} << *idx;
    SplitView view;
    view.left.alphabet = t.alphabet;
    view.right.alphabet = t.alphabet;
    std::optional<std::size_t> b;
    for (const auto& nt : t.traces) {
        std::optional<std::size_t> bt;
        bool is_left = false;
        if (auto l = left_bound(nt.trace, dollar); l && *l > 0) {
            bt = l;
            is_left = true;
        } else if (auto r = right_bound(nt.trace, dollar); r && *r > 0) {
            bt = r;
        }
        if (!bt || (b && *b != *bt)) return std::nullopt;
        b = bt;
        if (is_left) {
            view.left.traces.push_back(nt);
        } else {
            view.right.traces.push_back({nt.name, nt.trace.suffix(*bt).canonical()});
        }
    }
    view.bound = *b;
    return view;
}

TraceSet make_split(const Alphabet& alphabet, std::size_t b, const std::vector<std::vector<Letter>>& left,
                    const std::vector<LassoTrace>& right) {
    const Letter dollar = alphabet.bit(kDollar);
    TraceSet out;
    out.alphabet = alphabet;
    for (const auto& w : left) {
        if (w.size() != b) throw EvalError("left word length differs from the bound");
        for (Letter l : w) {
            if (l & dollar) throw EvalError("left word contains dollar");
        }
        out.add(LassoTrace(w, {dollar}));
    }
    for (const auto& r : right) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r.at(i) & dollar) throw EvalError("right trace contains dollar");
        }
        std::vector<Letter> stem(b, dollar);
        stem.insert(stem.end(), r.stem.begin(), r.stem.end());
        out.add(LassoTrace(std::move(stem), r.loop));
    }
    return out;
}

}  // namespace hyperlogic
