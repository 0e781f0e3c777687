#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlogic/lasso.hpp"

namespace hyperlogic {

using VertexId = std::uint32_t;
/// A lasso-shaped path given by its vertex sequence.
using LassoPath = Lasso<VertexId>;

class KripkeStructure {
public:
    KripkeStructure() = default;
    explicit KripkeStructure(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    VertexId add_vertex(std::string name, Letter label);
    void add_edge(VertexId from, VertexId to);
    void set_initial(VertexId v);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return names_.size(); }
    const std::string& name(VertexId v) const { return names_[v]; }
    Letter label(VertexId v) const { return labels_[v]; }
    const std::vector<VertexId>& successors(VertexId v) const { return succ_[v]; }
    VertexId initial() const;
    std::optional<VertexId> find(const std::string& name) const;

    /// Throws EvalError when there is no initial vertex or some vertex has no successor.
    void validate() const;

    LassoTrace labels_of(const LassoPath& p) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::vector<Letter> labels_;
    std::vector<std::vector<VertexId>> succ_;
    std::optional<VertexId> initial_;
};

/// Every lasso path from `start` with stem length at most `max_stem` and loop
/// length at most `max_loop`, each listed once in canonical form, ordered by
/// length, then stem length, then vertex ids.
std::vector<LassoPath> lasso_paths(const KripkeStructure& k, VertexId start, std::size_t max_stem,
                                   std::size_t max_loop);

}  // namespace hyperlogic
