#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperlogic/lasso.hpp"

namespace hyperlogic {

/// Name of the separator proposition.
inline const std::string kDollar = "dollar";

/// Common b with every trace equal to b ordinary letters followed by
/// {dollar} forever. Requires b >= 1; an empty set is not bounded.
std::optional<std::size_t> is_bounded(const TraceSet& t);

struct SplitView {
    std::size_t bound = 0;
    /// Traces of the form (ordinary)^b {dollar}^omega, unchanged.
    TraceSet left;
    /// Traces of the form {dollar}^b (ordinary)^omega with the prefix removed.
    TraceSet right;
};

/// Decomposes a split set. Every trace must start either with an ordinary
/// letter (left) or with {dollar} (right), and all traces must agree on b >= 1.
std::optional<SplitView> split_view(const TraceSet& t);

/// Builds the split set with left words `left` (each of length b) and right
/// suffixes `right`. `alphabet` must contain `dollar`.
TraceSet make_split(const Alphabet& alphabet, std::size_t b, const std::vector<std::vector<Letter>>& left,
                    const std::vector<LassoTrace>& right);

}  // namespace hyperlogic
