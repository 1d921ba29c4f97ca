#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"

#include "rotpath/greedy.hpp"
#include "rotpath/oracle.hpp"
#include "rotpath/random.hpp"

using namespace rotpath;
using testing::code_of;
using testing::G;

TEST_CASE("exact distance examples") {
  const auto s = G({0, 1, 2, 1, 2, 1});
  CHECK(exact_distance(s, s) == 0);
  CHECK(exact_distance(s, G({0, 1, 2, 3, 2, 1})) == 1);
  CHECK(exact_distance(G({0, 1, 2, 3, 2, 1, 2, 1}), G({0, 1, 2, 1, 2, 3, 2, 1})) == 2);
  CHECK(exact_distance(left_comb(4), right_comb(4)) == 2);
  CHECK(code_of([&] { exact_distance(s, G({0, 1})); }) == Errc::SizeMismatch);
  CHECK(code_of([] { exact_distance(left_comb(17), right_comb(17)); }) == Errc::CapExceeded);
  CHECK(code_of([] { exact_distance(left_comb(6), right_comb(6), 5); }) == Errc::CapExceeded);
}

TEST_CASE("exact distance matches plain BFS over the brute-force graph, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto adj = oracle::rotation_graph(n);
    for (const auto& [a, unused] : adj) {
      (void)unused;
      const auto dist = oracle::bfs(adj, a);
      for (const auto& [b, d] : dist) {
        REQUIRE(exact_distance(G(a), G(b)) == static_cast<std::size_t>(d));
      }
    }
  }
}

TEST_CASE("exact distance is a metric, n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_trees(n);
    std::vector<std::vector<std::size_t>> d(all.size(), std::vector<std::size_t>(all.size()));
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) d[a][b] = exact_distance(all[a], all[b]);
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
      REQUIRE(d[a][a] == 0);
      for (std::size_t b = 0; b < all.size(); ++b) {
        REQUIRE(d[a][b] == d[b][a]);
        if (a != b) REQUIRE(d[a][b] > 0);
        for (std::size_t c = 0; c < all.size(); ++c) REQUIRE(d[a][c] <= d[a][b] + d[b][c]);
      }
    }
  }
}

TEST_CASE("order examples") {
  const auto s = G({0, 1, 2, 3, 2, 1, 2, 1});
  CHECK(tamari_leq(s, s));
  CHECK(tamari_leq(left_comb(4), right_comb(4)));
  CHECK_FALSE(tamari_leq(right_comb(4), left_comb(4)));
  CHECK_FALSE(tamari_leq(s, G({0, 1, 2, 1, 2, 3, 2, 1})));
  CHECK_FALSE(tamari_leq(G({0, 1, 2, 1, 2, 3, 2, 1}), s));
  CHECK(code_of([] { tamari_leq(left_comb(13), right_comb(13)); }) == Errc::CapExceeded);
}

TEST_CASE("order matches reachability over the brute-force lift graph, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto adj = oracle::lift_graph(n);
    for (const auto& [a, unused] : adj) {
      (void)unused;
      const auto up = oracle::bfs(adj, a);
      for (const auto& [b, also_unused] : adj) {
        (void)also_unused;
        const bool leq = tamari_leq(G(a), G(b));
        REQUIRE(leq == up.contains(b));
        if (leq) REQUIRE(pointwise_leq(G(a), G(b)));
      }
    }
  }
}

TEST_CASE("lift and lower distance maps") {
  const auto up = lift_distances(left_comb(4));
  CHECK(up.size() == 5);
  CHECK(up.at(right_comb(4).step_string()) == 2);
  const auto down = lower_distances(right_comb(4));
  CHECK(down.size() == 5);
  CHECK(down.at(left_comb(4).step_string()) == 2);
  CHECK(lift_distances(right_comb(5)).size() == 1);
}

TEST_CASE("minimal upper bound examples") {
  const auto s = G({0, 1, 2, 3, 2, 1, 2, 1});
  CHECK(minimal_upper_bounds(s, s) == std::vector<StackGraph>{s});
  CHECK(minimal_upper_bounds(left_comb(4), s) == std::vector<StackGraph>{s});
  CHECK(minimal_upper_bounds(s, G({0, 1, 2, 1, 2, 3, 2, 1})) ==
        std::vector<StackGraph>{right_comb(4)});
  CHECK(code_of([] { minimal_upper_bounds(left_comb(11), right_comb(11)); }) ==
        Errc::CapExceeded);
}

TEST_CASE("minimal upper bounds agree with a quadratic filter, n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_trees(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        std::vector<StackGraph> common;
        for (const auto& u : all) {
          if (tamari_leq(a, u) && tamari_leq(b, u)) common.push_back(u);
        }
        std::vector<StackGraph> minimal;
        for (const auto& u : common) {
          const bool dominated = std::any_of(common.begin(), common.end(), [&](const auto& v) {
            return v != u && tamari_leq(v, u);
          });
          if (!dominated) minimal.push_back(u);
        }
        std::sort(minimal.begin(), minimal.end());
        REQUIRE(!minimal.empty());
        REQUIRE(minimal_upper_bounds(a, b) == minimal);
      }
    }
  }
}

TEST_CASE("order diagram examples") {
  auto d = order_diagram(3);
  CHECK(d.nodes.size() == 2);
  CHECK(d.edges.size() == 1);
  d = order_diagram(4);
  CHECK(d.nodes.size() == 5);
  CHECK(d.edges.size() == 5);
  d = order_diagram(5);
  CHECK(d.nodes.size() == 14);
  CHECK(d.edges.size() == 21);
  CHECK(order_diagram(1).edges.empty());
  CHECK(order_diagram(2).edges.empty());
  CHECK(code_of([] { order_diagram(13); }) == Errc::CapExceeded);
}

TEST_CASE("order diagram edges re-validate and count correctly") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto d = order_diagram(n);
    REQUIRE(d.nodes.size() == static_cast<std::size_t>(catalan(n)));
    REQUIRE(2 * d.edges.size() == d.nodes.size() * (n - 2));
    for (const auto& e : d.edges) {
      const auto step = classify_step(d.nodes[e.from], d.nodes[e.to]);
      REQUIRE(step.has_value());
      REQUIRE(*step == RotationStep{Direction::Lift, e.site});
    }
  }
}

TEST_CASE("order index distances match the implicit searches, n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const OrderIndex idx(order_diagram(n));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const auto dist = idx.distances_from(a);
      const auto up = idx.lift_distances_from(a);
      const auto ups = lift_distances(idx.node(a));
      for (std::size_t b = 0; b < idx.size(); ++b) {
        REQUIRE(dist[b] == static_cast<int>(exact_distance(idx.node(a), idx.node(b))));
        const auto it = ups.find(idx.node(b).step_string());
        if (it == ups.end()) REQUIRE(up[b] == OrderIndex::kUnreachable);
        else REQUIRE(up[b] == static_cast<int>(it->second));
      }
      REQUIRE(idx.index_of(idx.node(a)) == a);
    }
  }
}

TEST_CASE("order heights put the top alone at the top") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const OrderIndex idx(order_diagram(n));
    const auto h = idx.heights();
    const auto top = idx.index_of(right_comb(n));
    const auto bottom = idx.index_of(left_comb(n));
    CHECK(h[bottom] == 0);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k != top) REQUIRE(h[k] < h[top]);
    }
    for (const auto& e : idx.diagram().edges) REQUIRE(h[e.from] < h[e.to]);
  }
}

TEST_CASE("distance bound at n = 12 on seeded pairs") {
  // 11 internal nodes: 2 * 11 - 6.
  TreeGenerator gen(2024);
  for (int k = 0; k < 10; ++k) {
    const auto a = gen.next(12);
    const auto b = gen.next(12);
    const auto d = exact_distance(a, b);
    REQUIRE(d <= 16);
    REQUIRE(d <= greedy_estimate(a, b).rotations());
  }
}
