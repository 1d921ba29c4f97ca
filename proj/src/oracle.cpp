#include "rotpath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "rotpath/error.hpp"

namespace rotpath {

void require_within_cap(const StackGraph& s, std::size_t cap, const char* what) {
  if (s.leaves() > cap) {
    throw Error(Errc::CapExceeded, std::string(what) + " for n=" +
                                       std::to_string(s.leaves()) +
                                       " exceeds cap " + std::to_string(cap));
  }
}

std::size_t exact_distance(const StackGraph& a, const StackGraph& b,
                           std::size_t cap) {
  require_same_size(a, b);
  require_within_cap(a, cap, "exact distance");
  if (a == b) return 0;

  struct Side {
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<StackGraph> frontier;
    std::size_t depth = 0;
  };
  Side sides[2];
  sides[0].seen.emplace(a.step_string(), 0);
  sides[0].frontier.push_back(a);
  sides[1].seen.emplace(b.step_string(), 0);
  sides[1].frontier.push_back(b);

  while (!sides[0].frontier.empty() && !sides[1].frontier.empty()) {
    // Grow the smaller frontier by one full layer.
    const int grow = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& self = sides[grow];
    const Side& other = sides[1 - grow];
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<StackGraph> next;
    for (const auto& g : self.frontier) {
      for (auto& nb : rotation_neighbors(g)) {
        auto key = nb.step_string();
        if (auto hit = other.seen.find(key); hit != other.seen.end()) {
          best = std::min(best, self.depth + 1 + hit->second);
        }
        if (self.seen.emplace(std::move(key), self.depth + 1).second) {
          next.push_back(std::move(nb));
        }
      }
    }
    if (best != std::numeric_limits<std::size_t>::max()) return best;
    self.frontier = std::move(next);
    ++self.depth;
  }
  throw std::logic_error("rotation graph is disconnected");
}

namespace {

template <typename Sites, typename Apply>
std::unordered_map<std::string, std::size_t> one_way_bfs(const StackGraph& s,
                                                         Sites sites,
                                                         Apply apply) {
  std::unordered_map<std::string, std::size_t> dist{{s.step_string(), 0}};
  std::deque<std::pair<StackGraph, std::size_t>> queue{{s, 0}};
  while (!queue.empty()) {
    auto [g, d] = std::move(queue.front());
    queue.pop_front();
    for (const auto& site : sites(g)) {
      StackGraph nb = apply(g, site);
      if (dist.emplace(nb.step_string(), d + 1).second) {
        queue.emplace_back(std::move(nb), d + 1);
      }
    }
  }
  return dist;
}

}  // namespace

std::unordered_map<std::string, std::size_t> lift_distances(
    const StackGraph& s, std::size_t cap) {
  require_within_cap(s, cap, "lift closure");
  return one_way_bfs(
      s, [](const StackGraph& g) { return lift_sites(g); },
      [](const StackGraph& g, const LiftSite& x) { return apply_lift(g, x); });
}

std::unordered_map<std::string, std::size_t> lower_distances(
    const StackGraph& s, std::size_t cap) {
  require_within_cap(s, cap, "lower closure");
  return one_way_bfs(
      s, [](const StackGraph& g) { return lower_sites(g); },
      [](const StackGraph& g, const LiftSite& x) { return apply_lower(g, x); });
}

bool tamari_leq(const StackGraph& a, const StackGraph& b, std::size_t cap) {
  require_same_size(a, b);
  require_within_cap(a, cap, "order test");
  if (a == b) return true;
  // Lifts never lower a level, so only graphs pointwise below b can lead to it.
  if (!pointwise_leq(a, b)) return false;
  std::unordered_map<std::string, bool> seen{{a.step_string(), true}};
  std::deque<StackGraph> queue{a};
  while (!queue.empty()) {
    const StackGraph g = std::move(queue.front());
    queue.pop_front();
    for (const auto& site : lift_sites(g)) {
      StackGraph nb = apply_lift(g, site);
      if (nb == b) return true;
      if (!pointwise_leq(nb, b)) continue;
      if (seen.emplace(nb.step_string(), true).second) {
        queue.push_back(std::move(nb));
      }
    }
  }
  return false;
}

std::vector<StackGraph> minimal_upper_bounds(const StackGraph& a,
                                             const StackGraph& b,
                                             std::size_t cap) {
  require_same_size(a, b);
  require_within_cap(a, cap, "upper bound search");
  const auto above_a = lift_distances(a, cap);
  const auto above_b = lift_distances(b, cap);
  const auto& small = above_a.size() <= above_b.size() ? above_a : above_b;
  const auto& large = above_a.size() <= above_b.size() ? above_b : above_a;
  // Both up-sets are closed upwards, so a common bound u is minimal exactly
  // when none of the graphs one lower below it is a common bound.
  std::vector<StackGraph> out;
  for (const auto& [key, d] : small) {
    if (!large.contains(key)) continue;
    const StackGraph u = parse_tree_text(key, TextFormat::Steps);
    bool minimal = true;
    for (const auto& site : lower_sites(u)) {
      const auto key_below = apply_lower(u, site).step_string();
      if (small.contains(key_below) && large.contains(key_below)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderDiagram order_diagram(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(Errc::CapExceeded, "order diagram for n=" + std::to_string(n) +
                                       " exceeds cap " + std::to_string(cap));
  }
  OrderDiagram d;
  d.n = n;
  d.nodes = enumerate_trees(n, cap);
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(d.nodes.size());
  for (std::size_t k = 0; k < d.nodes.size(); ++k) {
    index.emplace(d.nodes[k].step_string(), k);
  }
  for (std::size_t k = 0; k < d.nodes.size(); ++k) {
    for (const auto& site : lift_sites(d.nodes[k])) {
      const auto to = index.at(apply_lift(d.nodes[k], site).step_string());
      d.edges.push_back({k, to, site});
    }
  }
  return d;
}

OrderIndex::OrderIndex(OrderDiagram diagram) : diagram_(std::move(diagram)) {
  const std::size_t count = diagram_.nodes.size();
  index_.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    index_.emplace(diagram_.nodes[k].step_string(), k);
  }
  up_.resize(count);
  down_.resize(count);
  for (const auto& e : diagram_.edges) {
    up_[e.from].push_back(static_cast<std::uint32_t>(e.to));
    down_[e.to].push_back(static_cast<std::uint32_t>(e.from));
  }
}

std::size_t OrderIndex::index_of(const StackGraph& s) const {
  return index_.at(s.step_string());
}

std::vector<int> OrderIndex::distances_from(std::size_t src) const {
  std::vector<int> dist(size(), kUnreachable);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(src)};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (const auto* adj : {&up_[v], &down_[v]}) {
      for (const auto w : *adj) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::vector<int> OrderIndex::lift_distances_from(std::size_t src) const {
  std::vector<int> dist(size(), kUnreachable);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(src)};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (const auto w : up_[v]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> OrderIndex::heights() const {
  // Lifts strictly raise the level sum, so sorting by it is a topological order.
  std::vector<std::size_t> order(size());
  std::vector<long> sums(size());
  for (std::size_t k = 0; k < size(); ++k) {
    order[k] = k;
    long total = 0;
    for (auto v : diagram_.nodes[k].levels()) total += v;
    sums[k] = total;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sums[x] < sums[y]; });
  std::vector<std::size_t> height(size(), 0);
  for (const auto v : order) {
    for (const auto w : up_[v]) height[w] = std::max(height[w], height[v] + 1);
  }
  return height;
}

}  // namespace rotpath
