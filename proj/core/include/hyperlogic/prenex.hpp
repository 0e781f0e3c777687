#pragma once

#include <cstddef>
#include <string>

#include "hyperlogic/formula.hpp"

namespace hyperlogic {

/// Converts a boolean combination of closed prenex sentences into one prenex
/// sentence. Bound variables are made unique (a clash on `p` is renamed to
/// `p_1`, `p_2`, ...), negations are pushed through quantifiers, and the
/// component prefixes are interleaved so that the result has as few
/// alternation blocks as possible. The result is equivalent to the input on
/// every non-empty trace set. Throws ScopeError when a quantifier sits
/// below a temporal operator or the input has free variables.
Sentence to_prenex(const Formula& f);

struct AlternationClass {
    /// Number of maximal quantifier blocks; 0 for a quantifier-free sentence.
    std::size_t level = 0;
    /// Quantifier of the first block. Meaningless at level 0, where the class
    /// is both Sigma_0 and Pi_0.
    Quant polarity = Quant::Exists;

    bool is_sigma() const { return level == 0 || polarity == Quant::Exists; }
    bool is_pi() const { return level == 0 || polarity == Quant::Forall; }
    AlternationClass dual() const { return {level, level == 0 ? polarity : hyperlogic::dual(polarity)}; }

    friend bool operator==(const AlternationClass& a, const AlternationClass& b) {
        return a.level == b.level && (a.level == 0 || a.polarity == b.polarity);
    }
};

AlternationClass classify(const Sentence& s);

/// "Sigma_2", "Pi_1", or "Sigma_0/Pi_0".
std::string to_string(const AlternationClass& c);

}  // namespace hyperlogic
