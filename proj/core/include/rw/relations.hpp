#pragma once

#include <map>
#include <string>

#include "rw/perm.hpp"

namespace rw {

/// Named permutations a word may refer to. All entries must share a degree.
using SymbolAssignment = std::map<std::string, Permutation>;

/// Evaluates a word over named permutations. A word is a sequence of
/// factors separated by spaces or '*'; a factor is an identifier, the
/// literal "1" (identity) or a parenthesised subword, optionally raised to
/// an integer power with '^' (negative exponents allowed). Juxtaposition is
/// composition with the RIGHTMOST factor acting first, matching
/// compose(p, q). Throws WordError on syntax errors, unbound identifiers,
/// or an empty assignment (the degree comes from the assignment).
Permutation evaluate_word(const std::string& word, const SymbolAssignment& assignment);

/// Checks an equation "lhs = rhs" (exactly one '='): true iff both sides
/// evaluate to the same permutation.
bool check_relation(const std::string& equation, const SymbolAssignment& assignment);

} // namespace rw
