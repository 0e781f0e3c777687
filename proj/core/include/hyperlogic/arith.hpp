#pragma once

// Third-order arithmetic sentences `exists X1 ... Xn. body` and their
// translation into HyperCTL*.
//
// Input syntax (s-expressions, `#` starts a comment line):
//
//   (third (X1 X2 ...) BODY)
//   BODY := (exists num x BODY) | (exists set Y BODY)
//         | (forall num x BODY) | (forall set Y BODY)
//         | (not BODY) | (and BODY BODY ...) | (or BODY BODY ...)
//         | (implies BODY BODY)
//         | (mem x Y)      number x is in set Y
//         | (mem Y Xi)     set Y is in third-order name Xi
//         | (lt x y) | (add x y z) | (mul x y z)

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlogic/formula.hpp"

namespace hyperlogic {

enum class Sort { Num, Set };

struct ArithFormula {
    enum class Kind { Exists, Forall, Not, And, Or, Implies, Mem, MemThird, Lt, Add, Mul };

    Kind kind;
    Sort sort = Sort::Num;          ///< quantifiers
    std::vector<std::string> args;  ///< bound variable, or predicate arguments
    std::vector<ArithFormula> kids;
};

struct ArithSentence {
    std::vector<std::string> third;  ///< existentially quantified third-order names
    ArithFormula body;
};

/// Parses and type-checks. Throws ParseError on bad syntax and ScopeError on
/// unbound or shadowed variables and sort mismatches.
ArithSentence parse_arith(std::string_view text);

/// The translated body: quantifiers over numbers and sets become path
/// quantifiers over pset paths, and predicates become the corresponding
/// temporal patterns. Third-order name Xi becomes proposition a<i>.
Formula translate_arith_body(const ArithSentence& s);

/// Conjunction of the structure constraints (set encoding, equal labelling of
/// paths with equal sets, and the arithmetic-operation traces) over the
/// propositions a1..an.
Formula arith_constraints(std::size_t num_third);

/// arith_constraints(n) & translate_arith_body(s).
Formula arith_to_hyperctl(const ArithSentence& s);

}  // namespace hyperlogic
