#pragma once

#include <string>
#include <string_view>

#include "gltm/trees.hpp"

namespace gltm {

// Parses a rooted or unrooted Newick string. Labels match [A-Za-z0-9_.-]+;
// ":length" tokens and inner-node labels are accepted and discarded. Degree-2
// nodes (including a bifurcating root) are suppressed. Throws ParseError with
// the line and column of the offending character.
Tree parse_newick(std::string_view text);

// Deterministic Newick: rooted at the inner node next to the smallest leaf,
// children ordered by the smallest leaf label below them. "(a,b,c);" for a
// tripod.
std::string serialize_newick(const Tree& t);

}  // namespace gltm
