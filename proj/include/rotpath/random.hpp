#pragma once

// Uniform random binary trees.
//
// A uniform index into the C(2n-1, n-1) sequences of n up-steps and n-1
// down-steps is decoded enumeratively; by the cycle lemma exactly one
// cyclic rotation of such a sequence is a stack graph, so every tree is hit
// by exactly 2n-1 sequences and the result is uniform.
//
// Randomness comes from std::mt19937_64 seeded with the 64-bit seed. The
// engine's output sequence is fixed by the C++ standard, and big indices are
// assembled from whole 64-bit outputs (least significant first, top word
// masked to the bound's bit length, out-of-range draws rejected), so results
// are identical on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rotpath/stack_graph.hpp"

namespace rotpath {

// Sequence of `len` bits with exactly `weight` ones: at each step emit 0 when
// index < C(remaining, ones_left), else subtract that count and emit 1.
// Throws IndexOutOfRange unless weight <= len and 0 <= index < C(len, weight).
std::vector<std::uint8_t> enumerative_decode(std::size_t len, std::size_t weight,
                                             const BigInt& index);

// Rotates a +1/-1 sequence summing to +1 so that it starts right after the
// last position of its prefix-sum minimum, and returns its prefix sums from
// 0. Throws BadStep for entries other than +-1 and BadEndpoint if the sum
// is not +1.
StackGraph cycle_rotate(std::span<const int> steps);

class TreeGenerator {
 public:
  explicit TreeGenerator(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  BigInt uniform_below(const BigInt& bound);

  StackGraph next(std::size_t leaves);

 private:
  std::mt19937_64 engine_;
  std::size_t cached_leaves_ = 0;  // bound below is C(2n-1, n-1) for this n
  BigInt cached_bound_;
};

// First draw of TreeGenerator(seed).
StackGraph random_stack_graph(std::size_t leaves, std::uint64_t seed);

}  // namespace rotpath
