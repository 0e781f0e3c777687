#pragma once

// First-order formulas over finite words: atoms a(x), order x <= y,
// boolean connectives and position quantifiers.

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hyperlogic {

enum class FoKind { True, False, Atom, Le, Not, And, Or, Implies, Iff, Exists, Forall };

class FoFormula {
public:
    FoFormula();

    FoKind kind() const noexcept;
    /// Letter name of an atom.
    const std::string& prop() const noexcept;
    /// Variable of an atom or quantifier; left variable of `x <= y`.
    const std::string& var() const noexcept;
    /// Right variable of `x <= y`.
    const std::string& var2() const noexcept;
    const FoFormula& lhs() const noexcept;
    const FoFormula& rhs() const noexcept;

    bool is_binary() const noexcept;
    bool is_quantifier() const noexcept;

    friend bool operator==(const FoFormula& a, const FoFormula& b);
    friend bool operator!=(const FoFormula& a, const FoFormula& b) { return !(a == b); }

    static FoFormula make(FoKind kind, std::string prop, std::string var, std::string var2, FoFormula lhs,
                          FoFormula rhs);

private:
    struct Node;
    explicit FoFormula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

namespace fo {
FoFormula top();
FoFormula bottom();
FoFormula atom(std::string prop, std::string var);
FoFormula le(std::string x, std::string y);
FoFormula neg(FoFormula f);
FoFormula land(FoFormula a, FoFormula b);
FoFormula lor(FoFormula a, FoFormula b);
FoFormula implies(FoFormula a, FoFormula b);
FoFormula iff(FoFormula a, FoFormula b);
FoFormula exists(std::string var, FoFormula body);
FoFormula forall(std::string var, FoFormula body);
}  // namespace fo

std::set<std::string> free_vars(const FoFormula& f);
std::set<std::string> props(const FoFormula& f);
/// True when all quantifiers form a prefix above a quantifier-free body.
bool is_prenex(const FoFormula& f);

std::string to_string(const FoFormula& f);

}  // namespace hyperlogic
