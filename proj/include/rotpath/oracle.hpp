#pragma once

// Brute-force ground truth for small trees: exact rotation distance, the
// right-rotation order and its upper bounds, and the full order diagram.
// Everything here is exponential in n and guarded by caps.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rotpath/rotation.hpp"
#include "rotpath/stack_graph.hpp"

namespace rotpath {

inline constexpr std::size_t kExactDistanceCap = 16;
inline constexpr std::size_t kOrderCap = 12;
inline constexpr std::size_t kUpperBoundCap = 10;

// Throws CapExceeded when the leaf count of s exceeds cap.
void require_within_cap(const StackGraph& s, std::size_t cap, const char* what);

// Length of a shortest rotation path, by bidirectional breadth-first search
// over implicitly generated neighbours. Throws CapExceeded, SizeMismatch.
std::size_t exact_distance(const StackGraph& a, const StackGraph& b,
                           std::size_t cap = kExactDistanceCap);

// a <= b: b is reachable from a by lifts alone (or a = b).
bool tamari_leq(const StackGraph& a, const StackGraph& b,
                std::size_t cap = kOrderCap);

// Lift-only BFS from s: every graph above s with its lift distance, keyed by
// step string.
std::unordered_map<std::string, std::size_t> lift_distances(
    const StackGraph& s, std::size_t cap = kOrderCap);
// Same, going down with lowers.
std::unordered_map<std::string, std::size_t> lower_distances(
    const StackGraph& s, std::size_t cap = kOrderCap);

// Minimal common upper bounds of a and b in the lift order, sorted by
// levels. Never empty: the right comb is above everything.
std::vector<StackGraph> minimal_upper_bounds(const StackGraph& a,
                                             const StackGraph& b,
                                             std::size_t cap = kUpperBoundCap);

struct OrderDiagram {
  struct Edge {
    std::size_t from = 0;  // lower graph
    std::size_t to = 0;    // apply_lift(nodes[from], site)
    LiftSite site;
  };

  std::size_t n = 0;
  std::vector<StackGraph> nodes;  // enumerate_trees order
  std::vector<Edge> edges;        // ordered by (from, site)
};

OrderDiagram order_diagram(std::size_t n, std::size_t cap = kOrderCap);

// Indexed view of an order diagram for all-pairs sweeps.
class OrderIndex {
 public:
  static constexpr int kUnreachable = -1;

  explicit OrderIndex(OrderDiagram diagram);

  const OrderDiagram& diagram() const noexcept { return diagram_; }
  std::size_t size() const noexcept { return diagram_.nodes.size(); }
  const StackGraph& node(std::size_t k) const { return diagram_.nodes[k]; }
  // Throws std::out_of_range for graphs of another size.
  std::size_t index_of(const StackGraph& s) const;

  const std::vector<std::uint32_t>& above(std::size_t k) const { return up_[k]; }
  const std::vector<std::uint32_t>& below(std::size_t k) const { return down_[k]; }

  // Undirected rotation distance from src to every node.
  std::vector<int> distances_from(std::size_t src) const;
  // Lift-only distance from src; kUnreachable for nodes not above src.
  std::vector<int> lift_distances_from(std::size_t src) const;

  // Longest chain from the bottom element to each node.
  std::vector<std::size_t> heights() const;

 private:
  OrderDiagram diagram_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> down_;
};

}  // namespace rotpath
