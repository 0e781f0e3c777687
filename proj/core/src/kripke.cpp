#include "hyperlogic/kripke.hpp"

#include <set>

namespace hyperlogic {

VertexId KripkeStructure::add_vertex(std::string name, Letter label) {
    if (find(name)) throw EvalError("duplicate vertex " + name);
    names_.push_back(std::move(name));
    labels_.push_back(label);
    succ_.emplace_back();
    return static_cast<VertexId>(names_.size() - 1);
}

void KripkeStructure::add_edge(VertexId from, VertexId to) {
    if (from >= size() || to >= size()) throw EvalError("edge refers to an unknown vertex");
    auto& s = succ_[from];
    for (VertexId v : s) {
        if (v == to) return;
    }
    s.push_back(to);
}

void KripkeStructure::set_initial(VertexId v) {
    if (v >= size()) throw EvalError("initial vertex is unknown");
    initial_ = v;
}

VertexId KripkeStructure::initial() const {
    if (!initial_) throw EvalError("structure has no initial vertex");
    return *initial_;
}

std::optional<VertexId> KripkeStructure::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<VertexId>(i);
    }
    return std::nullopt;
}

void KripkeStructure::validate() const {
    if (!initial_) throw EvalError("structure has no initial vertex");
    for (std::size_t v = 0; v < size(); ++v) {
        if (succ_[v].empty()) throw EvalError("vertex " + names_[v] + " has no successor");
    }
}

LassoTrace KripkeStructure::labels_of(const LassoPath& p) const {
    LassoTrace t;
    for (VertexId v : p.stem) t.stem.push_back(labels_[v]);
    for (VertexId v : p.loop) t.loop.push_back(labels_[v]);
    return t;
}

namespace {

struct PathCollector {
    const KripkeStructure& k;
    std::size_t max_stem;
    std::size_t max_loop;
    std::vector<VertexId> seq;
    std::set<LassoPath> found;

    void extend() {
        const std::size_t n = seq.size();
        for (std::size_t s = 0; s < n && s <= max_stem; ++s) {
            if (n - s > max_loop) continue;
            const auto& out = k.successors(seq.back());
            bool closes = false;
            for (VertexId v : out) closes = closes || v == seq[s];
            if (!closes) continue;
            LassoPath p(std::vector<VertexId>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(s)),
                        std::vector<VertexId>(seq.begin() + static_cast<std::ptrdiff_t>(s), seq.end()));
            found.insert(p.canonical());
        }
        if (n >= max_stem + max_loop) return;
        for (VertexId v : k.successors(seq.back())) {
            seq.push_back(v);
            extend();
            seq.pop_back();
        }
    }
};

}  // namespace

std::vector<LassoPath> lasso_paths(const KripkeStructure& k, VertexId start, std::size_t max_stem,
                                   std::size_t max_loop) {
    if (max_loop == 0) throw EvalError("loop bound must be at least 1");
    PathCollector c{k, max_stem, max_loop, {start}, {}};
    c.extend();
    std::vector<LassoPath> out(c.found.begin(), c.found.end());
    std::stable_sort(out.begin(), out.end(), [](const LassoPath& a, const LassoPath& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.stem.size() != b.stem.size()) return a.stem.size() < b.stem.size();
        return a < b;
    });
    return out;
}

}  // namespace hyperlogic
