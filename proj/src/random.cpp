#include "rotpath/random.hpp"

#include <string>

#include "rotpath/error.hpp"

namespace rotpath {

std::vector<std::uint8_t> enumerative_decode(std::size_t len, std::size_t weight,
                                             const BigInt& index) {
  if (weight > len) {
    throw Error(Errc::IndexOutOfRange, "weight " + std::to_string(weight) +
                                           " exceeds length " +
                                           std::to_string(len));
  }
  const BigInt total = binomial(len, weight);
  if (index < 0 || index >= total) {
    throw Error(Errc::IndexOutOfRange,
                "index must lie in [0, C(" + std::to_string(len) + ", " +
                    std::to_string(weight) + "))");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(len);
  if (len == 0) return bits;
  BigInt x = index;
  std::size_t ones = weight;
  // count = C(rest, ones) with rest = len - 1 - position, updated in place.
  std::size_t rest = len - 1;
  BigInt count = total;
  count *= len - weight;
  count /= len;
  for (std::size_t pos = 0; pos < len; ++pos) {
    const bool one = x >= count;
    if (one) x -= count;
    bits.push_back(one ? 1 : 0);
    if (rest == 0) break;
    // C(rest-1, ones) = C(rest, ones) (rest-ones) / rest and
    // C(rest-1, ones-1) = C(rest, ones) ones / rest.
    if (one) {
      count *= ones;
      --ones;
    } else {
      count *= rest - std::min(ones, rest);
    }
    count /= rest;
    --rest;
  }
  return bits;
}

StackGraph cycle_rotate(std::span<const int> steps) {
  const std::size_t len = steps.size();
  std::vector<std::int64_t> prefix(len);
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (steps[k] != 1 && steps[k] != -1) {
      throw Error(Errc::BadStep, "step must be +1 or -1", k);
    }
    sum += steps[k];
    prefix[k] = sum;
  }
  if (len == 0 || sum != 1) {
    throw Error(Errc::BadEndpoint, "steps must sum to +1");
  }
  std::size_t split = 0;  // last index of the minimum prefix sum
  for (std::size_t k = 0; k < len; ++k) {
    if (prefix[k] <= prefix[split]) split = k;
  }
  const std::int64_t low = prefix[split];
  std::vector<std::int64_t> levels;
  levels.reserve(len + 1);
  for (std::size_t k = split; k < len; ++k) levels.push_back(prefix[k] - low);
  for (std::size_t k = 0; k <= split; ++k) levels.push_back(1 + prefix[k] - low);
  return validate_stack_graph(std::span<const std::int64_t>(levels));
}

BigInt TreeGenerator::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw Error(Errc::IndexOutOfRange, "bound must be positive");
  if (bound == 1) return 0;
  const BigInt top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  while (true) {
    BigInt value = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = engine_();
      if (w + 1 == words && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
      value |= BigInt(word) << (64 * w);
    }
    if (value < bound) return value;
  }
}

StackGraph TreeGenerator::next(std::size_t leaves) {
  if (leaves < 1) throw Error(Errc::BadLength, "leaf count must be at least 1");
  const std::size_t len = 2 * leaves - 1;
  if (leaves != cached_leaves_) {
    cached_bound_ = binomial(len, leaves - 1);
    cached_leaves_ = leaves;
  }
  const BigInt index = uniform_below(cached_bound_);
  const auto bits = enumerative_decode(len, leaves, index);
  std::vector<int> steps(len);
  for (std::size_t k = 0; k < len; ++k) steps[k] = bits[k] ? 1 : -1;
  return cycle_rotate(steps);
}

StackGraph random_stack_graph(std::size_t leaves, std::uint64_t seed) {
  return TreeGenerator(seed).next(leaves);
}

}  // namespace rotpath
