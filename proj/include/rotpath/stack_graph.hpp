#pragma once

// Stack-graph encoding of unlabeled binary trees.
//
// A tree with n leaves has N = 2n-1 nodes. Walking the tree in post-order
// and adding +1 per leaf, -1 per internal node traces the stack depth of an
// evaluator processing the corresponding bracketed formula. The trace
// levels[0..N] starts at 0, ends at 1, and never drops below 1 after the
// first step. Positions are 0-indexed: position p here is position p+1 in
// 1-indexed listings of the same sequence.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rotpath {

using BigInt = boost::multiprecision::cpp_int;

class StackGraph;

namespace detail {
// Wraps levels that are already known to satisfy every StackGraph invariant.
StackGraph adopt_levels(std::vector<std::int32_t> levels);
}  // namespace detail

class StackGraph {
 public:
  using Level = std::int32_t;

  // The single-leaf graph [0, 1].
  StackGraph();

  std::span<const Level> levels() const noexcept { return levels_; }
  Level operator[](std::size_t position) const { return levels_[position]; }

  std::size_t leaves() const noexcept { return levels_.size() / 2; }
  std::size_t nodes() const noexcept { return levels_.size() - 1; }
  std::size_t size() const noexcept { return levels_.size(); }

  // Canonical key: one '+' or '-' per node in post-order.
  std::string step_string() const;

  friend bool operator==(const StackGraph&, const StackGraph&) = default;
  friend auto operator<=>(const StackGraph& a, const StackGraph& b) {
    return a.levels_ <=> b.levels_;
  }

 private:
  explicit StackGraph(std::vector<Level> levels) : levels_(std::move(levels)) {}
  friend StackGraph detail::adopt_levels(std::vector<std::int32_t>);

  std::vector<Level> levels_;
};

struct StackGraphHash {
  std::size_t operator()(const StackGraph& s) const noexcept;
};

// Throws BadLength, BadEndpoint, BadStep or BelowFloor.
StackGraph validate_stack_graph(std::span<const std::int64_t> levels);
StackGraph validate_stack_graph(const std::vector<int>& levels);

// Recursive unlabeled binary tree with shared immutable structure.
class Tree {
 public:
  static Tree leaf();
  static Tree node(Tree left, Tree right);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  const Tree& left() const;
  const Tree& right() const;

  std::size_t leaves() const noexcept;
  std::size_t nodes() const noexcept { return 2 * leaves() - 1; }

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Tree recursive_swap(const Tree& t);

StackGraph tree_to_stack_graph(const Tree& t);
Tree stack_graph_to_tree(const StackGraph& s);

enum class TextFormat { Bracket, Steps, Levels };

// "bracket", "steps" or "levels"; throws ParseError otherwise.
TextFormat parse_text_format(std::string_view name);
const char* to_string(TextFormat format) noexcept;

// Leading '(' or a lone 'x' selects bracket, a ',' selects levels, anything
// else is read as steps.
TextFormat detect_text_format(std::string_view text);

// Throws ParseError (with position) for malformed text and InvalidTree for
// well-formed text that does not describe a stack graph. Steps input accepts
// '-' and U+2212 for down-steps; output always uses '-'.
StackGraph parse_tree_text(std::string_view text, TextFormat format);
std::string print_tree_text(const StackGraph& s, TextFormat format);

inline constexpr std::size_t kDefaultEnumerationCap = 16;

// Every stack graph with n leaves, lexicographic on step strings with '+'
// ordered before '-'. Throws CapExceeded when n > cap.
std::vector<StackGraph> enumerate_trees(std::size_t n,
                                        std::size_t cap = kDefaultEnumerationCap);

BigInt binomial(std::uint64_t n, std::uint64_t k);
// Number of binary trees with n leaves, C(2n-2, n-1)/n.
BigInt catalan(std::uint64_t n);

// Throws SizeMismatch when leaf counts differ.
bool pointwise_leq(const StackGraph& a, const StackGraph& b);
void require_same_size(const StackGraph& a, const StackGraph& b);

// Top element [0, 1, ..., n, n-1, ..., 1] and bottom element [0, 1, 2, 1, 2, ..., 1].
StackGraph right_comb(std::size_t n);
StackGraph left_comb(std::size_t n);

}  // namespace rotpath
