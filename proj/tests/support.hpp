#pragma once

#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rotpath/error.hpp"
#include "rotpath/rotation.hpp"
#include "rotpath/stack_graph.hpp"

namespace doctest {
template <>
struct StringMaker<rotpath::StackGraph> {
  static String convert(const rotpath::StackGraph& s) {
    return rotpath::print_tree_text(s, rotpath::TextFormat::Levels).c_str();
  }
};
template <>
struct StringMaker<rotpath::LiftSite> {
  static String convert(const rotpath::LiftSite& x) {
    return ("(" + std::to_string(x.i) + "," + std::to_string(x.j) + ")").c_str();
  }
};
}  // namespace doctest

namespace testing {

inline rotpath::StackGraph G(const std::vector<int>& levels) {
  return rotpath::validate_stack_graph(levels);
}

inline rotpath::Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const rotpath::Error& e) {
    return e.code();
  }
  FAIL("expected rotpath::Error");
  return rotpath::Errc::ParseError;
}

// Random walk generator for property tests. Not uniform over trees, which
// is fine for invariants and reaches shapes the uniform sampler rarely does.
class WalkGen {
 public:
  explicit WalkGen(std::uint64_t seed) : rng_(seed) {}

  rotpath::StackGraph next(int n) {
    std::vector<int> s{0};
    int ups_left = n;
    int downs_left = n - 1;
    while (ups_left + downs_left > 0) {
      const int level = s.back();
      bool up = ups_left > 0;
      if (up && downs_left > 0 && level > 1) up = coin_(rng_);
      s.push_back(level + (up ? 1 : -1));
      (up ? ups_left : downs_left) -= 1;
    }
    return G(s);
  }

  std::uint64_t next_u64() { return rng_(); }
  int below(int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng_); }

 private:
  std::mt19937_64 rng_;
  std::bernoulli_distribution coin_{0.5};
};

}  // namespace testing
