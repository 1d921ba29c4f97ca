#pragma once

// Independent reference implementations used only by tests. None of these
// call into the code path they check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rotpath/stack_graph.hpp"

namespace oracle {

using Levels = std::vector<int>;

inline Levels levels_of(const rotpath::StackGraph& s) {
  return Levels(s.levels().begin(), s.levels().end());
}

// Every +-1 string of length 2n-1 filtered by the stack-graph conditions,
// sorted with '+' before '-'.
inline std::vector<Levels> all_stack_graphs(int n) {
  const int len = 2 * n - 1;
  std::vector<std::pair<std::string, Levels>> found;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    Levels s{0};
    std::string key;
    bool ok = true;
    for (int k = 0; k < len; ++k) {
      const bool up = (mask >> (len - 1 - k)) & 1u;
      s.push_back(s.back() + (up ? 1 : -1));
      key.push_back(up ? '+' : '-');
      if (s.back() < 1) ok = false;
    }
    if (ok && s.back() == 1) found.emplace_back(key, s);
  }
  // ASCII already orders '+' (0x2B) before '-' (0x2D).
  std::sort(found.begin(), found.end());
  std::vector<Levels> out;
  for (auto& [k, s] : found) out.push_back(s);
  return out;
}

// Mirror on the bracket text: reverse it and swap the parentheses.
inline std::string mirror_bracket(const std::string& text) {
  std::string out(text.rbegin(), text.rend());
  for (char& c : out) {
    if (c == '(') c = ')';
    else if (c == ')') c = '(';
  }
  return out;
}

// The three conditions on (i, j) read literally, 0-indexed.
inline bool literal_site(const Levels& s, int i, int j) {
  const int N = static_cast<int>(s.size()) - 1;
  if (!(i <= j) || i < 1 || j > N) return false;
  if (s[i] != s[j]) return false;
  if (!(s[i - 1] == s[i] + 1 && i + 1 <= N && s[i + 1] == s[i] + 1 &&
        s[j - 1] == s[i] + 1)) {
    return false;
  }
  for (int k = i + 1; k < j; ++k) {
    if (!(s[k] > s[i])) return false;
  }
  return true;
}

inline std::vector<std::pair<int, int>> literal_sites(const Levels& s) {
  std::vector<std::pair<int, int>> out;
  const int N = static_cast<int>(s.size()) - 1;
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 2; j <= N; ++j) {
      if (literal_site(s, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

// Segment shift: r[k] = s[k+1] + 1 on [i, j), unchanged elsewhere.
inline Levels literal_lift(const Levels& s, int i, int j) {
  Levels r = s;
  for (int k = i; k < j; ++k) r[k] = s[k + 1] + 1;
  return r;
}

// Mathematica-style lift[s, f, t] on 1-indexed lists:
// Join[s[[1;;f-1]], s[[f+1;;t]] + 1, {s[[t]]}, s[[t+1;;]]].
inline Levels appendix_lift(const Levels& s1based_as0, int f, int t) {
  auto at = [&](int p) { return s1based_as0[static_cast<std::size_t>(p - 1)]; };
  const int len = static_cast<int>(s1based_as0.size());
  Levels out;
  for (int p = 1; p <= f - 1; ++p) out.push_back(at(p));
  for (int p = f + 1; p <= t; ++p) out.push_back(at(p) + 1);
  out.push_back(at(t));
  for (int p = t + 1; p <= len; ++p) out.push_back(at(p));
  return out;
}

struct GreedyTrace {
  std::vector<std::pair<int, int>> first;   // 0-indexed sites
  std::vector<std::pair<int, int>> second;
  Levels common;
};

// Transcription of the appendix findrotationpath loop (1-indexed inside).
inline GreedyTrace appendix_greedy(Levels s1, Levels s2) {
  GreedyTrace trace;
  const int len = static_cast<int>(s1.size());
  auto at = [](const Levels& s, int p) { return s[static_cast<std::size_t>(p - 1)]; };
  while (s1 != s2) {
    int min = 1 << 30;
    int pm = 0;
    for (int i = 1; i <= len; ++i) {
      if (at(s1, i) != at(s2, i)) {
        const int m = std::min(at(s1, i), at(s2, i));
        if (m <= min) {
          min = m;
          pm = i;
        }
      }
    }
    int px = pm + 2;
    if (at(s1, pm) < at(s2, pm)) {
      while (at(s1, px) > min) ++px;
      s1 = appendix_lift(s1, pm, px);
      trace.first.emplace_back(pm - 1, px - 1);
    } else {
      while (at(s2, px) > min) ++px;
      s2 = appendix_lift(s2, pm, px);
      trace.second.emplace_back(pm - 1, px - 1);
    }
  }
  trace.common = s1;
  return trace;
}

// Appendix dec[n, w, X] with binomials computed from scratch each step.
inline std::vector<int> appendix_dec(int n, int w, std::uint64_t X) {
  auto binom = [](int a, int b) -> std::uint64_t {
    if (b < 0 || b > a) return 0;
    std::uint64_t r = 1;
    for (int k = 1; k <= b; ++k) r = r * static_cast<std::uint64_t>(a - b + k) / k;
    return r;
  };
  int l = w;
  std::uint64_t x = X;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t b = binom(n - i, l);
    if (x < b) {
      out.push_back(0);
    } else {
      x -= b;
      --l;
      out.push_back(1);
    }
  }
  return out;
}

// Neighbours by trying every literal site on both sides, over the explicit
// vertex list.
inline std::map<Levels, std::vector<Levels>> rotation_graph(int n) {
  std::map<Levels, std::vector<Levels>> adj;
  const auto all = all_stack_graphs(n);
  for (const auto& s : all) adj[s];
  for (const auto& s : all) {
    for (auto [i, j] : literal_sites(s)) {
      const Levels r = literal_lift(s, i, j);
      adj[s].push_back(r);
      adj[r].push_back(s);
    }
  }
  return adj;
}

inline std::map<Levels, int> bfs(const std::map<Levels, std::vector<Levels>>& adj,
                                 const Levels& src) {
  std::map<Levels, int> dist{{src, 0}};
  std::deque<Levels> queue{src};
  while (!queue.empty()) {
    const Levels v = queue.front();
    queue.pop_front();
    for (const auto& w : adj.at(v)) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

// Lift-only reachability over the explicit vertex list.
inline std::map<Levels, std::vector<Levels>> lift_graph(int n) {
  std::map<Levels, std::vector<Levels>> adj;
  for (const auto& s : all_stack_graphs(n)) {
    auto& out = adj[s];
    for (auto [i, j] : literal_sites(s)) out.push_back(literal_lift(s, i, j));
  }
  return adj;
}

}  // namespace oracle
