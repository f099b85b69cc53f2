#pragma once

#include <string_view>

#include "klab/logic/formula.hpp"

namespace klab {

/// Parses the formula DSL (whitespace is insignificant):
///
///   formula := disj
///   disj    := conj { "|" conj }
///   conj    := lit { "&" lit }
///   lit     := "!" lit | "(" formula ")" | atom
///   atom    := IDENT "(" term { "," term } ")" | term "=" term | term "!=" term
///              | "true" | "false"
///   term    := "x" INT | "y" INT          (INT >= 1)
///   IDENT   := "E" | "R"
///
/// `t1 != t2` parses to Not(Eq(t1, t2)). Throws parse_error carrying the 1-based column and
/// the set of tokens that would have been accepted there.
Formula parse_formula(std::string_view text);

}  // namespace klab
