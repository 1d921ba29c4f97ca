#pragma once

// Rotations as stack-graph moves.
//
// A right rotation ((a b) c) -> (a (b c)) moves the down-step that closes
// (a b) to the end of c. On the stack graph this lifts the segment between
// a valley at position i and the first return to the same level at j by the
// vector (-1, +1). A left rotation is the inverse move (a "lower").

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rotpath/stack_graph.hpp"

namespace rotpath {

// Lift site (i, j), always expressed against the lower of the two graphs a
// rotation connects. Valid for s when i + 2 <= j, s[i] = s[j],
// s[i-1] = s[i+1] = s[j-1] = s[i] + 1 and s[k] > s[i] for i < k < j.
struct LiftSite {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const LiftSite&, const LiftSite&) = default;
  friend auto operator<=>(const LiftSite&, const LiftSite&) = default;
};

enum class Direction { Lift, Lower };

const char* to_string(Direction d) noexcept;

struct RotationStep {
  Direction direction = Direction::Lift;
  LiftSite site;

  friend bool operator==(const RotationStep&, const RotationStep&) = default;
};

struct RotationPath {
  std::vector<StackGraph> graphs;
  std::vector<RotationStep> steps;
  // Index into graphs of the common lift when the path came out of the
  // greedy search; drawn as a marked panel.
  std::optional<std::size_t> peak;

  std::size_t rotations() const noexcept { return steps.size(); }
};

bool is_lift_site(std::span<const StackGraph::Level> levels,
                  const LiftSite& site);
bool is_lift_site(const StackGraph& s, const LiftSite& site);

// All lift sites of s ordered by (i, j). Each valley contributes exactly one.
std::vector<LiftSite> lift_sites(const StackGraph& s);

// Sites x for which some s0 satisfies apply_lift(s0, x) = s, ordered by (i, j).
std::vector<LiftSite> lower_sites(const StackGraph& s);

// Throws InvalidSite when the site is not a lift site of s.
StackGraph apply_lift(const StackGraph& s, const LiftSite& site);

// Inverse of apply_lift. Throws InvalidSite when no pre-image exists.
StackGraph apply_lower(const StackGraph& s, const LiftSite& site);

// Every graph one rotation away from s: lifts first, then lowers.
std::vector<StackGraph> rotation_neighbors(const StackGraph& s);

// The single rotation taking a to b, if there is one. Throws SizeMismatch.
std::optional<RotationStep> classify_step(const StackGraph& a,
                                          const StackGraph& b);

struct PathReport {
  bool valid = false;
  bool endpoints_match = false;
  std::size_t lifts = 0;
  std::size_t lowers = 0;
  // Lift* Lower* or Lower* Lift*.
  bool sorted = false;
  std::string failure;
};

PathReport verify_path(const RotationPath& path, const StackGraph& src,
                       const StackGraph& dst);

// JSON Lines: one {"levels": [...], "step": {...} | null} object per graph.
void write_path_jsonl(std::ostream& out, const RotationPath& path);
// Throws ParseError on malformed lines and InvalidTree on invalid levels.
RotationPath read_path_jsonl(std::istream& in);

}  // namespace rotpath
