#pragma once

#include <cstddef>
#include <vector>

#include "hyperlogic/lasso.hpp"

namespace hyperlogic {

/// Finite word over an alphabet of ordinary propositions.
struct Word {
    Alphabet alphabet;
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
};

/// Strictly increasing map from word positions to positive time points.
class StretchSpec {
public:
    /// f(n) = factor * (n + 1).
    static StretchSpec uniform(std::size_t factor);
    /// Explicit values f(0) < f(1) < ...; all at least 1.
    static StretchSpec table(std::vector<std::size_t> values);

    /// Throws EvalError when a table is too short for position n.
    std::size_t operator()(std::size_t n) const;

private:
    std::size_t factor_ = 1;
    std::vector<std::size_t> table_;
};

}  // namespace hyperlogic
