#pragma once

// Bounded HyperCTL* over finite Kripke structures.
//
// Path quantifiers range over the lasso paths with stem <= S and loop <= L
// that start in the vertex where the most recently quantified path currently
// is (the initial vertex when nothing is bound yet). Next shifts every bound
// path; Until inspects positions 0 .. s+p-1 of the current assignment, after
// which the vertex tuple repeats.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlogic/assignment.hpp"
#include "hyperlogic/compiled.hpp"
#include "hyperlogic/kripke.hpp"

namespace hyperlogic {

struct PathBounds {
    std::size_t max_stem = 1;
    std::size_t max_loop = 1;
};

using PathAssignment = Assignment<VertexId>;

/// Recursive evaluation. `phi` must be closed; `k` must be total with an
/// initial vertex. Propositions absent from k's alphabet never hold.
bool check_bounded(const Formula& phi, const KripkeStructure& k, PathBounds bounds);

enum class Player { Verifier, Falsifier };

inline Player opponent(Player p) { return p == Player::Verifier ? Player::Falsifier : Player::Verifier; }

struct GameVertex {
    PathAssignment assignment;
    std::uint32_t node = 0;  ///< subformula id in Game::core
    std::uint8_t b = 0;      ///< negation parity
    std::optional<std::size_t> j;  ///< set on until-index vertices
    Player owner = Player::Falsifier;
    std::vector<std::uint32_t> succ;
    /// Winner of a terminal vertex (no successors).
    Player terminal_winner = Player::Falsifier;

    bool terminal() const { return succ.empty(); }
};

struct Game {
    CoreFormula core;
    std::vector<GameVertex> vertices;
    std::uint32_t initial = 0;
    /// Every vertex listed after all of its successors.
    std::vector<std::uint32_t> post_order;

    /// Vertex lines `#id owner=V|F (p:[stem](loop), ..., subformula, b[, j])`
    /// followed by edge lines `#id -> #id`; paths are written with vertex names.
    std::string dump(const KripkeStructure& k) const;

    /// Number of moves on the longest play from the initial vertex.
    std::size_t longest_play() const;
};

Game build_game(const Formula& phi, const KripkeStructure& k, PathBounds bounds);

struct GameResult {
    Player winner = Player::Falsifier;
    /// Winner of every vertex.
    std::vector<Player> wins;
    /// Chosen successor of every non-terminal vertex: the first successor in
    /// construction order that wins for the owner, else the first successor.
    std::vector<std::optional<std::uint32_t>> strategy;
};

GameResult solve_game(const Game& game);

}  // namespace hyperlogic
