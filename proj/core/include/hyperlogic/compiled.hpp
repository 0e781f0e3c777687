#pragma once

// Desugared, hash-consed formula DAG over the core connectives
// {true, atom, !, |, X, U, exists, forall}. Children always precede their
// parents in `nodes`, so a single forward pass evaluates bottom-up.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperlogic/formula.hpp"

namespace hyperlogic {

enum class Op : std::uint8_t { True, Atom, Not, Or, Next, Until, Exists, Forall };

struct CoreNode {
    Op op;
    std::uint32_t a = 0;     ///< operand / left operand / quantifier body
    std::uint32_t b = 0;     ///< right operand of | and U
    std::uint32_t prop = 0;  ///< index into CoreFormula::props (atoms)
    std::uint32_t var = 0;   ///< index into CoreFormula::vars (atoms, quantifiers)

    friend bool operator==(const CoreNode&, const CoreNode&) = default;
};

class CoreFormula {
public:
    CoreFormula() = default;

    /// Compiles `f`. Variables listed in `var_order` get the first indices, in
    /// that order; others are appended as encountered.
    static CoreFormula compile(const Formula& f, const std::vector<std::string>& var_order = {});

    const std::vector<CoreNode>& nodes() const { return nodes_; }
    const CoreNode& node(std::uint32_t id) const { return nodes_[id]; }
    std::uint32_t root() const { return root_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<std::string>& props() const { return props_; }

    /// Operator depth below `id` counting every connective and quantifier.
    std::size_t depth(std::uint32_t id) const;
    std::size_t depth() const { return depth(root_); }

    /// Bitmask of variable indices occurring free below `id` (at most 64 variables).
    std::uint64_t free_mask(std::uint32_t id) const { return free_[id]; }
    bool has_quantifier(std::uint32_t id) const { return quantified_[id]; }

    /// The subformula rooted at `id` rendered back into a Formula.
    Formula to_formula(std::uint32_t id) const;

private:
    friend class CoreBuilder;

    std::vector<CoreNode> nodes_;
    std::vector<std::uint64_t> free_;
    std::vector<bool> quantified_;
    std::vector<std::string> vars_;
    std::vector<std::string> props_;
    std::uint32_t root_ = 0;
};

}  // namespace hyperlogic
