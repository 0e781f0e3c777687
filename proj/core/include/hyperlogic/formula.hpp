#pragma once

// Temporal formulas with trace quantifiers.
//
// One tree type serves both logics: a HyperLTL sentence is a quantifier
// prefix over a quantifier-free matrix (see `Sentence`), a HyperCTL* formula
// may nest quantifiers anywhere. Sugar (&, ->, <->, F, G, true, false) is
// kept in the tree so that printing reproduces what was parsed; the engines
// desugar to the {!, |, X, U} core themselves.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hyperlogic {

enum class Kind {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Next,
    Until,
    Eventually,
    Globally,
    Exists,
    Forall,
};

class Formula {
public:
    /// Default-constructed formula is `true`.
    Formula();

    Kind kind() const noexcept;
    /// Proposition name of an atom.
    const std::string& prop() const noexcept;
    /// Trace variable of an atom or a quantifier.
    const std::string& var() const noexcept;
    /// Operand of unary operators and quantifiers, left operand of binary ones.
    const Formula& lhs() const noexcept;
    const Formula& rhs() const noexcept;

    bool is_binary() const noexcept;
    bool is_unary() const noexcept;
    bool is_quantifier() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    /// Raw node constructor used by the builders below.
    static Formula make(Kind kind, std::string prop, std::string var, Formula lhs, Formula rhs);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Builders. `conj`/`disj` fold left and render empty lists as true/false.
namespace fml {
Formula top();
Formula bottom();
Formula atom(std::string prop, std::string var);
Formula neg(Formula f);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula next(Formula f);
Formula until(Formula a, Formula b);
Formula eventually(Formula f);
Formula always(Formula f);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula conj(const std::vector<Formula>& parts);
Formula disj(const std::vector<Formula>& parts);
}  // namespace fml

enum class Quant { Exists, Forall };

inline Quant dual(Quant q) { return q == Quant::Exists ? Quant::Forall : Quant::Exists; }

struct QuantifiedVar {
    Quant quant;
    std::string var;

    friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

/// A prenex HyperLTL sentence.
struct Sentence {
    std::vector<QuantifiedVar> prefix;
    Formula matrix;

    /// The sentence as a single tree (quantifiers wrapped around the matrix).
    Formula to_formula() const;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Splits leading quantifiers off `f`. The matrix may still contain quantifiers.
Sentence split_prefix(const Formula& f);

std::set<std::string> free_vars(const Formula& f);
/// Every variable name occurring in `f`, bound or free.
std::set<std::string> all_vars(const Formula& f);
std::set<std::string> props(const Formula& f);
bool is_quantifier_free(const Formula& f);

/// Nesting depth of X and U (F and G count as one U); quantifiers are transparent.
std::size_t temporal_depth(const Formula& f);
/// Nesting depth counting every operator and quantifier.
std::size_t operator_depth(const Formula& f);

/// Canonical text form in the grammar accepted by `parse_formula`.
std::string to_string(const Formula& f);
std::string to_string(const Sentence& s);
std::string to_string(Quant q);

}  // namespace hyperlogic
