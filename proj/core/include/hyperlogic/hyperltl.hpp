#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlogic/formula.hpp"
#include "hyperlogic/lasso.hpp"

namespace hyperlogic {

struct CheckOptions {
    /// Push quantifiers inward and memoize subformula values per trace tuple.
    /// When false, every full assignment of the prefix is enumerated.
    bool miniscope = true;
};

/// Whether T satisfies the sentence. Throws EvalError when T is empty or a
/// proposition of the sentence is missing from T's alphabet.
bool check(const Sentence& phi, const TraceSet& t, CheckOptions opts = {});

/// Same for a closed formula in any shape; non-prenex input is converted first.
bool check_formula(const Formula& phi, const TraceSet& t, CheckOptions opts = {});

/// Value at position 0 of a quantifier-free formula under an explicit
/// assignment of traces to its free variables.
bool eval_qf(const Formula& psi, const std::map<std::string, LassoTrace>& assignment, const Alphabet& alphabet);

struct SearchBudget {
    std::size_t max_traces = 1;
    std::size_t max_stem = 1;
    std::size_t max_loop = 1;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class SatStatus { Found, Exhausted, TimedOut };

struct SatResult {
    SatStatus status = SatStatus::Exhausted;
    TraceSet model;                ///< meaningful when status == Found
    std::size_t sets_checked = 0;  ///< candidate sets handed to check()
};

/// Canonical lassos over `num_props` propositions with stem <= max_stem and
/// loop <= max_loop, ordered by size, then stem length, then letter values.
std::vector<LassoTrace> candidate_traces(std::size_t num_props, std::size_t max_stem, std::size_t max_loop);

/// Searches trace sets over the sentence's propositions (sorted by name) in
/// order of total size, then lexicographically by candidate index, and returns
/// the first model. `jobs` > 1 evaluates batches concurrently without changing
/// which model is reported.
SatResult sat_enum(const Sentence& phi, const SearchBudget& budget, unsigned jobs = 1);

}  // namespace hyperlogic
