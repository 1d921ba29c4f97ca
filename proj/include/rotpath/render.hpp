#pragma once

// SVG and DOT emitters. Output is a pure function of the input: identical
// inputs give byte-identical text.

#include <string>
#include <vector>

#include "rotpath/oracle.hpp"
#include "rotpath/rotation.hpp"
#include "rotpath/stack_graph.hpp"

namespace rotpath {

struct StyledGraph {
  StackGraph graph;
  std::string label;
  std::string color;
};

// Palette for overlays: first input, second input, common lift.
inline constexpr const char* kFirstColor = "#1f77b4";
inline constexpr const char* kSecondColor = "#2ca02c";
inline constexpr const char* kLiftColor = "#ff7f0e";

// 24 px per position and per level, origin bottom-left, 8 px margin, legend
// rows above the plot. Throws SizeMismatch when overlaid graphs differ in n.
std::string stack_graph_svg(const std::vector<StyledGraph>& graphs);

// Nodes are post-order indices 1..N; edges point from each internal node to
// its two children.
std::string tree_dot(const StackGraph& s);

// One panel per graph (tree above its stack graph), left to right. The
// panel at path.peak is framed and tagged "CL".
std::string path_filmstrip(const RotationPath& path);

// Arrows go from lower to higher (right rotation); nodes share a rank when
// their longest chain from the bottom element has the same length.
std::string hasse_dot(const OrderDiagram& diagram);

}  // namespace rotpath
