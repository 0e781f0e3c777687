#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperlogic/fo_formula.hpp"
#include "hyperlogic/formula.hpp"
#include "hyperlogic/lasso.hpp"
#include "hyperlogic/word.hpp"

namespace hyperlogic {

/// Name of the position marker proposition in word encodings.
inline const std::string kMarker = "o";

using FoValuation = std::map<std::string, std::size_t>;

/// Truth of `phi` on `w` under `nu`. Throws EvalError when a free variable is
/// not covered or is mapped outside the word. Letters missing from the word's
/// alphabet never hold.
bool eval_fo(const Word& w, const FoFormula& phi, const FoValuation& nu = {});

/// One trace per position n: the letter w(n) at time 0, the marker at time
/// f(n), empty letters elsewhere. Traces are named t0, t1, ...
TraceSet encode_word(const Word& w, const StretchSpec& f);

/// Same quantifier prefix; a(x) becomes a[x] and x <= y becomes
/// F(o[x] & F o[y]). Throws ScopeError on non-prenex or open input.
Sentence fo_to_hyperltl(const FoFormula& phi);

/// Respaces an encoding so that the marker of the n-th position sits at
/// time N(n+1). Throws EvalError when `t` is not a word encoding.
TraceSet stretch_set(const TraceSet& t, std::size_t n);

/// The stretched traces of an assignment given as variable -> index into `t`.
std::map<std::string, LassoTrace> stretch_assignment(const TraceSet& t, const std::map<std::string, std::size_t>& pi,
                                                     std::size_t n);

/// An equivalence class of marker-spaced assignments: the ordinary
/// propositions true at time 0 and the order in which the markers occur.
struct LabelClass {
    /// Pairs (prop, var) holding at time 0.
    std::vector<std::pair<std::string, std::string>> labels;
    /// Marker rank of each variable; equal ranks share a time point. The
    /// ranks used form a prefix of 0, 1, 2, ...
    std::map<std::string, std::size_t> rank;

    friend bool operator==(const LabelClass&, const LabelClass&) = default;
};

/// Every class over the given propositions and variables, ordered by label
/// bitmask (variable-major, then proposition) and then by rank vector.
std::vector<LabelClass> label_classes(const std::vector<std::string>& props, const std::vector<std::string>& vars);

/// Formula satisfied by exactly the assignments in the class.
Formula class_formula(const LabelClass& c, const std::vector<std::string>& props,
                      const std::vector<std::string>& vars);

/// Representative assignment: labels at time 0, rank-i markers at time N(i+1).
std::map<std::string, LassoTrace> representative(const LabelClass& c, const Alphabet& alphabet, std::size_t n);

/// Disjunction of the class formulas whose representative satisfies `psi`
/// when markers are spaced temporal_depth(psi) + 1 apart. Throws EvalError if
/// `psi` is not quantifier-free or mentions `dollar`.
Formula simplify_qf(const Formula& psi);

}  // namespace hyperlogic
