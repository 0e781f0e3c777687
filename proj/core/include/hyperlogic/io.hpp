#pragma once

// Line-oriented text formats. Blank lines and lines starting with `#` are
// ignored everywhere. An optional `props: a b ...` line fixes the alphabet
// order; otherwise propositions are sorted by name.
//
//   trace set   trace NAME = {a}{a b}({}{b})      stem letters, then (loop)
//   Kripke      vertex NAME {a b} / init NAME / edge FROM TO
//   word        word = {a}{}{a}
//   tiles       colors: c1 c2 / tile NAME north=c south=c east=c west=c
//               recurring: NAME

#include <string>
#include <string_view>

#include "hyperlogic/constructions.hpp"
#include "hyperlogic/kripke.hpp"
#include "hyperlogic/lasso.hpp"
#include "hyperlogic/word.hpp"

namespace hyperlogic {

/// Whole file contents; throws Error when the file cannot be read.
std::string read_file(const std::string& path);

/// Parses `{..}{..}(..)` over `alphabet`.
LassoTrace parse_trace(std::string_view text, const Alphabet& alphabet);

TraceSet parse_trace_set(std::string_view text);
std::string format_trace_set(const TraceSet& t);

KripkeStructure parse_kripke(std::string_view text);
std::string format_kripke(const KripkeStructure& k);

Word parse_word(std::string_view text);
std::string format_word(const Word& w);

TileSet parse_tiles(std::string_view text);

}  // namespace hyperlogic
