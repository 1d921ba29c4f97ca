#pragma once

// Greedy common-lift search.
//
// Both graphs are lifted until they agree. Each round picks the lowest level
// at which they disagree (taking the smaller of the two values at every
// differing position), the rightmost differing position i at that level, and
// lifts whichever graph is lower at i over (i, j), j being its next return
// to that level. The result is a common upper bound and, read forwards on
// one side and backwards on the other, a rotation path. Running the same
// search on the mirror images gives a common lower bound instead; the
// shorter of the two runs is the estimate.

#include <cstddef>
#include <vector>

#include "rotpath/rotation.hpp"
#include "rotpath/stack_graph.hpp"

namespace rotpath {

struct CommonLiftResult {
  StackGraph common_lift;
  std::vector<LiftSite> lifts_from_first;
  std::vector<LiftSite> lifts_from_second;
  // Rounds where taking the level from the first graph only (instead of the
  // smaller of both values) would have chosen a different (level, i).
  // Only filled when requested.
  std::size_t literal_reading_divergences = 0;

  std::size_t rotations() const noexcept {
    return lifts_from_first.size() + lifts_from_second.size();
  }
};

struct GreedyOptions {
  bool track_literal_reading = false;
};

// Throws SizeMismatch.
CommonLiftResult greedy_common_lift(const StackGraph& s1, const StackGraph& s2,
                                    const GreedyOptions& options = {});

struct GreedyEstimate {
  CommonLiftResult original;
  // Run on mirror(s1), mirror(s2); sites refer to the mirrored graphs.
  CommonLiftResult mirrored;
  bool use_mirrored = false;

  std::size_t rotations() const noexcept {
    return use_mirrored ? mirrored.rotations() : original.rotations();
  }
};

// Both runs; ties go to the original orientation.
GreedyEstimate greedy_estimate(const StackGraph& s1, const StackGraph& s2,
                               const GreedyOptions& options = {});

// Replays one chosen run as a path from s1 to s2 in the original
// orientation. The peak (common lift, or the mirror image of the mirrored
// common lift) is recorded in RotationPath::peak.
RotationPath materialize_path(const StackGraph& s1, const StackGraph& s2,
                              const GreedyEstimate& estimate);

RotationPath find_rotation_path(const StackGraph& s1, const StackGraph& s2);

}  // namespace rotpath
