#pragma once

#include "rotpath/stack_graph.hpp"

namespace rotpath {

// Stack graph of the mirror image (children swapped at every node). Linear
// time and memory. Mirroring exchanges left and right rotations, so it
// reverses the rotation order.
StackGraph mirror(const StackGraph& s);

// Same result through an explicit Tree and recursive_swap.
StackGraph mirror_via_tree(const StackGraph& s);

}  // namespace rotpath
