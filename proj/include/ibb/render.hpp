#pragma once

#include <string>

#include "ibb/partial_perm.hpp"

namespace ibb {

/// Schematic strand picture of an element, one line per source:
/// `1 --(+)--> 2` for defined strands, dashes for deleted ones.
std::string render_text(const SignedPartialPerm& a);

/// Graphviz digraph with one node per boundary point (t1..tn on top,
/// b1..bn at the bottom), edges labeled with the strand sign; deleted
/// sources and unused targets are dashed.
std::string render_dot(const SignedPartialPerm& a);

}  // namespace ibb
