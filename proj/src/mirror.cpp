#include "rotpath/mirror.hpp"

#include <cstdint>
#include <vector>

namespace rotpath {

StackGraph mirror(const StackGraph& s) {
  // In the mirror's post-order the leaves come in reverse, and an internal
  // node closes right after what is its leftmost leaf in the original. So it
  // is enough to count, per leaf, the internal nodes it is leftmost in.
  const std::size_t n = s.leaves();
  // closes[leaf] for leaves 0..n-1, then the stack of leftmost leaves above.
  std::vector<std::uint32_t> scratch(2 * n, 0);
  std::uint32_t* closes = scratch.data();
  std::uint32_t* leftmost = scratch.data() + n;
  std::size_t depth = 0;
  std::uint32_t next_leaf = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] > s[k - 1]) {
      leftmost[depth++] = next_leaf++;
    } else {
      --depth;
      ++closes[leftmost[depth - 1]];
    }
  }
  std::vector<StackGraph::Level> out(s.size());
  std::size_t k = 0;
  StackGraph::Level level = 0;
  out[k++] = level;
  for (std::size_t leaf = n; leaf-- > 0;) {
    out[k++] = ++level;
    for (std::uint32_t c = 0; c < closes[leaf]; ++c) out[k++] = --level;
  }
  return detail::adopt_levels(std::move(out));
}

StackGraph mirror_via_tree(const StackGraph& s) {
  return tree_to_stack_graph(recursive_swap(stack_graph_to_tree(s)));
}

}  // namespace rotpath
