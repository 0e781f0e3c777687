#pragma once

// Text grammar shared by every formula kind:
//
//   formula  := iff
//   iff      := imp ("<->" imp)*            left-assoc
//   imp      := or ("->" imp)?              right-assoc
//   or       := and ("|" and)*
//   and      := until ("&" until)*
//   until    := unary ("U" until)?          right-assoc
//   unary    := ("!" | "X" | "F" | "G") unary | quant | primary
//   quant    := ("exists" | "forall") IDENT "." formula
//   primary  := "true" | "false" | "(" formula ")" | atom
//   atom     := IDENT "[" IDENT "]"                      (hyper)
//             | IDENT "(" IDENT ")" | IDENT "<=" IDENT   (first-order)
//
// A quantifier body extends as far to the right as possible. Identifiers are
// [A-Za-z0-9_]+ excluding the keywords above.

#include <string_view>

#include "hyperlogic/error.hpp"
#include "hyperlogic/fo_formula.hpp"
#include "hyperlogic/formula.hpp"

namespace hyperlogic {

/// Parses a temporal formula without any scoping checks.
Formula parse_formula(std::string_view text);

/// Parses a closed prenex sentence with pairwise distinct quantified variables.
Sentence parse_hyperltl(std::string_view text);

/// Parses a closed formula with quantifiers at any depth and no shadowing.
Formula parse_hyperctl(std::string_view text);

/// Parses a first-order formula. Free variables are rejected unless `allow_free`.
FoFormula parse_fo(std::string_view text, bool allow_free = false);

/// Scoping checks used by the parsers, exposed for generated formulas.
void check_closed(const Formula& f);
void check_no_shadowing(const Formula& f);

/// Removes `#` comment lines and joins the rest; used for formula files.
std::string strip_comments(std::string_view text);

}  // namespace hyperlogic
