#pragma once

#include "bdom/graph.hpp"

namespace bdom {

// Builds the canonically labeled instance of a family.
//
// Labeling (1-based): Path/Cycle number vertices along the path / around the
// cycle. Sunlet variants place the m base vertices first in cycle order, then
// branch 1's pendant vertices base-outward, then branch 2's, and so on, so a
// pendant vertex's distance from its base vertex equals its position within
// the branch. Roles are tagged Base/Pendant, with the outermost pendant of
// each branch tagged Leaf.
Graph generate(const FamilySpec& spec);

}  // namespace bdom
