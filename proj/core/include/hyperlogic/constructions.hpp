#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "hyperlogic/formula.hpp"
#include "hyperlogic/kripke.hpp"

namespace hyperlogic {

struct Tile {
    std::string name;
    std::string north;
    std::string south;
    std::string east;
    std::string west;
};

struct TileSet {
    std::vector<std::string> colors;
    std::vector<Tile> tiles;
    std::string recurring;

    /// Throws EvalError unless there is at least one tile, every side uses a
    /// declared color, tile names are unique, distinct from `x` and `null`, and
    /// the recurring tile exists.
    void validate() const;
    const Tile& tile(const std::string& name) const;
};

/// The seven conjuncts of the recurring-tiling reduction, each a closed sentence.
std::vector<Formula> tiling_conjuncts(const TileSet& ts);
Sentence gen_tiling(const TileSet& ts);

/// Conjuncts of the lower-triangle variant: the extra `null` tile fills every
/// position after the x-point and matching is only required up to it.
std::vector<Formula> tiling_diagonal_conjuncts(const TileSet& ts);
Sentence gen_tiling_diagonal(const TileSet& ts);

/// The four conjuncts describing the set-encoding Kripke structure.
std::vector<Formula> phiset_conjuncts();
Formula gen_phiset();

/// Finite fragment of the set-encoding structure: a full binary fbt tree of
/// the given depth below the initial vertex (leaves loop on themselves) and
/// one pset path per requested set, ending in a looping zero vertex.
KripkeStructure gen_kset_truncation(std::size_t depth, const std::vector<std::set<std::size_t>>& sets);

struct PhiOpParts {
    Formula uniqueness;
    /// groups[0]: commutativity, [1]: addition base and successor,
    /// [2]: addition closure, [3]: multiplication base and successor,
    /// [4]: multiplication closure.
    std::vector<std::vector<Formula>> groups;

    std::vector<Formula> all() const;
};

PhiOpParts phiop_parts();
Sentence gen_phiop();

/// All traces in (2^AP)^b {dollar}^omega for one common b. `alphabet` must not contain `dollar`.
Sentence gen_phib(const std::vector<std::string>& alphabet);

/// Holds exactly on the finite sets of traces that end in the empty letter forever.
Sentence gen_finite_model_selector(const std::vector<std::string>& alphabet);

/// Sentence that holds on a split set iff its left part satisfies `left` and
/// its right part satisfies `right`. Throws EvalError when `right` has no
/// quantifier or either side mentions `dollar`.
Sentence combine_split(const Sentence& left, const Sentence& right);

}  // namespace hyperlogic
