#pragma once

// Empirical comparison of the greedy estimate against exact answers.
//
// Small sizes are swept over every unordered pair of trees (identity pairs
// included); larger sizes use seeded random pairs. Only two properties are
// hard requirements: the greedy count is never below the exact distance,
// and the greedy common lift is a common upper bound. The remaining numbers
// are measurements of open questions:
//   * how often the greedy count equals the exact distance,
//   * whether the greedy common lift is the least common upper bound (and
//     whether that least bound is unique),
//   * whether some shortest path is sorted (all lifts then all lowers, or
//     the reverse),
//   * whether the greedy reaches its common lift with the fewest lifts.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rotpath {

struct ReportOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 8;
  std::size_t exhaustive_max = 8;
  std::size_t samples = 200;  // pairs per size above exhaustive_max
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::size_t max_listed = 20;  // counterexamples listed per size
  std::size_t cap = 12;
};

struct Counterexample {
  std::string first;   // step strings
  std::string second;
  std::size_t greedy = 0;
  std::size_t exact = 0;
};

struct SizeReport {
  std::size_t n = 0;
  bool exhaustive = false;
  std::size_t pairs = 0;

  // greedy - exact, keyed by gap.
  std::map<long, std::size_t> gap_histogram;
  // Same for the unmirrored run alone.
  std::map<long, std::size_t> one_sided_gap_histogram;
  std::size_t max_exact_distance = 0;

  // Hard requirements; must stay zero.
  std::size_t greedy_below_exact = 0;
  std::size_t common_lift_not_upper_bound = 0;

  // Counts over pairs; empty when not computed at this size.
  std::optional<std::size_t> common_lift_is_minimal_upper_bound;
  std::optional<std::size_t> unique_minimal_upper_bound;
  std::optional<std::size_t> sorted_shortest_path;
  std::optional<std::size_t> greedy_lift_count_minimal;

  std::size_t mirror_checks = 0;
  std::size_t mirror_failures = 0;

  // Pairs where taking the level from the first graph only would change
  // some greedy choice.
  std::size_t literal_reading_divergent_pairs = 0;

  // Exact distance against 2m - 6 for m >= 11 internal nodes.
  std::optional<std::size_t> distance_bound_violations;

  std::size_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;
};

struct ConjectureReport {
  ReportOptions options;
  std::vector<SizeReport> sizes;

  bool requirements_hold() const;
};

// Throws CapExceeded when n_max exceeds options.cap.
ConjectureReport conjecture_report(const ReportOptions& options);

nlohmann::json to_json(const ConjectureReport& report);
std::string to_text(const ConjectureReport& report);

}  // namespace rotpath
