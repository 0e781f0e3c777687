#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlogic/compiled.hpp"
#include "hyperlogic/lasso.hpp"

namespace hyperlogic {

/// Truth value of every quantifier-free subformula at every position of a
/// fixed assignment. Positions 0..s+p-1 are stored; later positions wrap into
/// the loop (j >= s maps to s + (j - s) mod p).
class ExpansionTable {
public:
    const CoreFormula& core() const { return *core_; }
    const Alignment& alignment() const { return align_; }
    std::size_t positions() const { return align_.horizon(); }

    /// Whether `node` was tabulated (it is reachable from the root).
    bool has(std::uint32_t node) const { return !values_[node].empty(); }
    bool value(std::uint32_t node, std::size_t j) const;
    bool holds() const { return value(core_->root(), 0); }

private:
    friend ExpansionTable build_expansion_bits(const CoreFormula&, std::span<const LassoTrace* const>,
                                               std::span<const Letter>, const Alignment*);
    const CoreFormula* core_ = nullptr;
    Alignment align_;
    std::vector<std::vector<std::uint8_t>> values_;
};

/// `traces[v]` is the trace bound to variable index v of `core` (nullptr when
/// unbound). The root must be quantifier-free and its atoms' variables bound.
/// Propositions missing from `alphabet` raise EvalError. The table references
/// `core`, which must outlive it.
ExpansionTable build_expansion(const CoreFormula& core, std::span<const LassoTrace* const> traces,
                               const Alphabet& alphabet);

/// Same, over an explicit alignment; `a.stem` must cover every stem and
/// `a.period` must be a multiple of every loop length.
ExpansionTable build_expansion(const CoreFormula& core, std::span<const LassoTrace* const> traces,
                               const Alphabet& alphabet, const Alignment& a);

/// Low-level entry: `prop_bits[i]` is the letter mask of core proposition i
/// (0 for a proposition that never holds).
ExpansionTable build_expansion_bits(const CoreFormula& core, std::span<const LassoTrace* const> traces,
                                    std::span<const Letter> prop_bits, const Alignment* a = nullptr);

/// Letter masks of `core`'s propositions; throws EvalError on a missing one
/// unless `missing_is_false`.
std::vector<Letter> prop_bits(const CoreFormula& core, const Alphabet& alphabet, bool missing_is_false = false);

}  // namespace hyperlogic
