#include "rotpath/greedy.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "rotpath/mirror.hpp"

namespace rotpath {

namespace {

// Min over per-position keys; a key encodes (level, -position) so the
// minimum is the lowest differing level and, within it, the rightmost
// position. Positions where the graphs agree hold kAgree.
class DisagreementIndex {
 public:
  static constexpr std::int64_t kAgree = std::numeric_limits<std::int64_t>::max();

  DisagreementIndex(const std::vector<StackGraph::Level>& a,
                    const std::vector<StackGraph::Level>& b)
      : a_(a), b_(b), len_(a.size()) {
    width_ = 1;
    while (width_ < len_) width_ *= 2;
    tree_.assign(2 * width_, kAgree);
    for (std::size_t k = 0; k < len_; ++k) tree_[width_ + k] = key(k);
    for (std::size_t v = width_; v-- > 1;) {
      tree_[v] = std::min(tree_[2 * v], tree_[2 * v + 1]);
    }
  }

  bool agree() const { return tree_[1] == kAgree; }

  // (level, position) of the current minimum.
  std::pair<StackGraph::Level, std::size_t> lowest() const {
    const auto m = tree_[1];
    const auto span = static_cast<std::int64_t>(len_);
    return {static_cast<StackGraph::Level>(m / span),
            len_ - 1 - static_cast<std::size_t>(m % span)};
  }

  void refresh(std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) tree_[width_ + k] = key(k);
    std::size_t lo = (width_ + from) / 2;
    std::size_t hi = (width_ + to - 1) / 2;
    while (lo >= 1) {
      for (std::size_t v = lo; v <= hi; ++v) {
        tree_[v] = std::min(tree_[2 * v], tree_[2 * v + 1]);
      }
      if (lo == 1) break;
      lo /= 2;
      hi /= 2;
    }
  }

 private:
  std::int64_t key(std::size_t k) const {
    if (a_[k] == b_[k]) return kAgree;
    const std::int64_t level = std::min(a_[k], b_[k]);
    return level * static_cast<std::int64_t>(len_) +
           static_cast<std::int64_t>(len_ - 1 - k);
  }

  const std::vector<StackGraph::Level>& a_;
  const std::vector<StackGraph::Level>& b_;
  std::size_t len_;
  std::size_t width_;
  std::vector<std::int64_t> tree_;
};

bool literal_reading_differs(const std::vector<StackGraph::Level>& a,
                             const std::vector<StackGraph::Level>& b,
                             StackGraph::Level level, std::size_t pos) {
  auto literal_level = std::numeric_limits<StackGraph::Level>::max();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) literal_level = std::min(literal_level, a[k]);
  }
  if (literal_level != level) return true;
  std::size_t literal_pos = a.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k] && a[k] == literal_level) literal_pos = k;
  }
  return literal_pos != pos;
}

void lift_in_place(std::vector<StackGraph::Level>& s, const LiftSite& site) {
  for (std::size_t k = site.i; k < site.j; ++k) s[k] = s[k + 1] + 1;
}

}  // namespace

CommonLiftResult greedy_common_lift(const StackGraph& s1, const StackGraph& s2,
                                    const GreedyOptions& options) {
  require_same_size(s1, s2);
  std::vector<StackGraph::Level> a(s1.levels().begin(), s1.levels().end());
  std::vector<StackGraph::Level> b(s2.levels().begin(), s2.levels().end());
  CommonLiftResult result;
  DisagreementIndex index(a, b);
  while (!index.agree()) {
    const auto [level, i] = index.lowest();
    if (options.track_literal_reading &&
        literal_reading_differs(a, b, level, i)) {
      ++result.literal_reading_divergences;
    }
    const bool first_is_lower = a[i] < b[i];
    auto& lower = first_is_lower ? a : b;
    std::size_t j = i + 2;
    while (j < lower.size() && lower[j] > level) ++j;
    const LiftSite site{i, j};
    if (!is_lift_site(std::span<const StackGraph::Level>(lower), site)) {
      throw std::logic_error("greedy common lift chose (" + std::to_string(i) +
                             ", " + std::to_string(j) +
                             ") which is not a lift site");
    }
    lift_in_place(lower, site);
    (first_is_lower ? result.lifts_from_first : result.lifts_from_second)
        .push_back(site);
    index.refresh(site.i, site.j);
  }
  result.common_lift = detail::adopt_levels(std::move(a));
  return result;
}

GreedyEstimate greedy_estimate(const StackGraph& s1, const StackGraph& s2,
                               const GreedyOptions& options) {
  GreedyEstimate estimate{greedy_common_lift(s1, s2, options),
                          greedy_common_lift(mirror(s1), mirror(s2), options),
                          false};
  estimate.use_mirrored =
      estimate.mirrored.rotations() < estimate.original.rotations();
  return estimate;
}

namespace {

// s1 -> ... -> peak -> ... -> s2 in the space the run was done in.
RotationPath replay(const StackGraph& s1, const StackGraph& s2,
                    const CommonLiftResult& run) {
  RotationPath path;
  path.graphs.reserve(run.rotations() + 1);
  path.graphs.push_back(s1);
  for (const auto& site : run.lifts_from_first) {
    path.graphs.push_back(apply_lift(path.graphs.back(), site));
    path.steps.push_back({Direction::Lift, site});
  }
  path.peak = path.graphs.size() - 1;
  std::vector<StackGraph> climb{s2};
  climb.reserve(run.lifts_from_second.size() + 1);
  for (const auto& site : run.lifts_from_second) {
    climb.push_back(apply_lift(climb.back(), site));
  }
  if (climb.back() != path.graphs.back()) {
    throw std::logic_error("greedy runs did not meet at the common lift");
  }
  for (std::size_t t = run.lifts_from_second.size(); t-- > 0;) {
    path.graphs.push_back(std::move(climb[t]));
    path.steps.push_back({Direction::Lower, run.lifts_from_second[t]});
  }
  return path;
}

}  // namespace

RotationPath materialize_path(const StackGraph& s1, const StackGraph& s2,
                              const GreedyEstimate& estimate) {
  if (!estimate.use_mirrored) return replay(s1, s2, estimate.original);
  const RotationPath mirrored =
      replay(mirror(s1), mirror(s2), estimate.mirrored);
  RotationPath path;
  path.peak = mirrored.peak;
  path.graphs.reserve(mirrored.graphs.size());
  for (const auto& g : mirrored.graphs) path.graphs.push_back(mirror(g));
  for (std::size_t k = 0; k + 1 < path.graphs.size(); ++k) {
    const auto step = classify_step(path.graphs[k], path.graphs[k + 1]);
    if (!step) {
      throw std::logic_error("mirrored step " + std::to_string(k) +
                             " is not a single rotation");
    }
    path.steps.push_back(*step);
  }
  return path;
}

RotationPath find_rotation_path(const StackGraph& s1, const StackGraph& s2) {
  return materialize_path(s1, s2, greedy_estimate(s1, s2));
}

}  // namespace rotpath
