#include "rotpath/stack_graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <utility>

#include "rotpath/error.hpp"

namespace rotpath {

namespace detail {
StackGraph adopt_levels(std::vector<std::int32_t> levels) {
  return StackGraph(std::move(levels));
}
}  // namespace detail

StackGraph::StackGraph() : levels_{0, 1} {}

std::string StackGraph::step_string() const {
  std::string out(nodes(), '+');
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    if (levels_[k] < levels_[k - 1]) out[k - 1] = '-';
  }
  return out;
}

std::size_t StackGraphHash::operator()(const StackGraph& s) const noexcept {
  // FNV-1a over the levels.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : s.levels()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

StackGraph validate_stack_graph(std::span<const std::int64_t> levels) {
  const std::size_t len = levels.size();
  if (len < 2 || len % 2 != 0) {
    throw Error(Errc::BadLength,
                "stack graph needs an even number of levels >= 2, got " +
                    std::to_string(len));
  }
  if (levels.front() != 0) {
    throw Error(Errc::BadEndpoint, "levels[0] must be 0", 0);
  }
  if (levels.back() != 1) {
    throw Error(Errc::BadEndpoint, "last level must be 1", len - 1);
  }
  for (std::size_t k = 1; k < len; ++k) {
    const std::int64_t d = levels[k] - levels[k - 1];
    if (d != 1 && d != -1) {
      throw Error(Errc::BadStep,
                  "levels[" + std::to_string(k) + "] - levels[" +
                      std::to_string(k - 1) + "] must be +1 or -1",
                  k);
    }
  }
  for (std::size_t k = 1; k < len; ++k) {
    if (levels[k] < 1) {
      throw Error(Errc::BelowFloor,
                  "levels[" + std::to_string(k) + "] must be at least 1", k);
    }
  }
  // Steps of +-1 from 0 keep every value within [0, len), so int32 is safe
  // for any graph that fits in memory.
  std::vector<StackGraph::Level> out(levels.begin(), levels.end());
  return detail::adopt_levels(std::move(out));
}

StackGraph validate_stack_graph(const std::vector<int>& levels) {
  std::vector<std::int64_t> wide(levels.begin(), levels.end());
  return validate_stack_graph(std::span<const std::int64_t>(wide));
}

// ---------------------------------------------------------------------------
// Tree

struct Tree::Node {
  Tree left;
  Tree right;
  std::size_t leaves;
};

Tree Tree::leaf() { return Tree(nullptr); }

Tree Tree::node(Tree left, Tree right) {
  const std::size_t n = left.leaves() + right.leaves();
  return Tree(std::make_shared<const Node>(
      Node{std::move(left), std::move(right), n}));
}

const Tree& Tree::left() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->right;
}

std::size_t Tree::leaves() const noexcept { return node_ ? node_->leaves : 1; }

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  if (a.leaves() != b.leaves()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

Tree recursive_swap(const Tree& t) {
  if (t.is_leaf()) return t;
  return Tree::node(recursive_swap(t.right()), recursive_swap(t.left()));
}

StackGraph tree_to_stack_graph(const Tree& t) {
  std::vector<StackGraph::Level> levels;
  levels.reserve(t.nodes() + 1);
  levels.push_back(0);
  // Iterative post-order; the flag marks a node whose children are done.
  std::vector<std::pair<const Tree*, bool>> pending{{&t, false}};
  while (!pending.empty()) {
    auto [cur, expanded] = pending.back();
    pending.pop_back();
    if (cur->is_leaf()) {
      levels.push_back(levels.back() + 1);
    } else if (expanded) {
      levels.push_back(levels.back() - 1);
    } else {
      pending.emplace_back(cur, true);
      pending.emplace_back(&cur->right(), false);
      pending.emplace_back(&cur->left(), false);
    }
  }
  return detail::adopt_levels(std::move(levels));
}

Tree stack_graph_to_tree(const StackGraph& s) {
  std::vector<Tree> stack;
  stack.reserve(s.leaves());
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] > s[k - 1]) {
      stack.push_back(Tree::leaf());
    } else {
      Tree right = std::move(stack.back());
      stack.pop_back();
      Tree left = std::move(stack.back());
      stack.back() = Tree::node(std::move(left), std::move(right));
    }
  }
  return std::move(stack.back());
}

// ---------------------------------------------------------------------------
// Text codecs

TextFormat parse_text_format(std::string_view name) {
  if (name == "bracket") return TextFormat::Bracket;
  if (name == "steps") return TextFormat::Steps;
  if (name == "levels") return TextFormat::Levels;
  throw Error(Errc::ParseError, "unknown format '" + std::string(name) +
                                    "' (expected bracket, steps or levels)");
}

const char* to_string(TextFormat format) noexcept {
  switch (format) {
    case TextFormat::Bracket: return "bracket";
    case TextFormat::Steps: return "steps";
    case TextFormat::Levels: return "levels";
  }
  return "?";
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

[[noreturn]] void parse_error(const std::string& what, std::size_t pos) {
  throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos),
              pos);
}

StackGraph from_raw_levels(const std::vector<std::int64_t>& levels) {
  try {
    return validate_stack_graph(std::span<const std::int64_t>(levels));
  } catch (const Error& e) {
    throw Error(Errc::InvalidTree, e.what(), e.position());
  }
}

StackGraph parse_bracket(std::string_view text, std::size_t base) {
  std::vector<std::int64_t> levels{0};
  // Children seen so far for every open '('.
  std::vector<int> open;
  bool have_root = false;
  auto add_subtree = [&](std::size_t pos) {
    if (open.empty()) {
      if (have_root) parse_error("extra tree after complete expression",
                                base + pos);
      have_root = true;
    } else if (++open.back() > 2) {
      parse_error("node with more than two children", base + pos);
    }
  };
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (is_space(c)) continue;
    if (c == 'x') {
      add_subtree(pos);
      levels.push_back(levels.back() + 1);
    } else if (c == '(') {
      if (open.empty() && have_root) {
        parse_error("extra tree after complete expression", base + pos);
      }
      if (!open.empty() && open.back() >= 2) {
        parse_error("node with more than two children", base + pos);
      }
      open.push_back(0);
    } else if (c == ')') {
      if (open.empty()) parse_error("unmatched ')'", base + pos);
      if (open.back() != 2) {
        parse_error("node with fewer than two children", base + pos);
      }
      open.pop_back();
      add_subtree(pos);
      levels.push_back(levels.back() - 1);
    } else {
      parse_error(std::string("unexpected character '") + c + "'", base + pos);
    }
  }
  if (!open.empty()) parse_error("unclosed '('", base + text.size());
  if (!have_root) parse_error("empty expression", base);
  return from_raw_levels(levels);
}

StackGraph parse_steps(std::string_view text, std::size_t base) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::vector<std::int64_t> levels{0};
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '+') {
      levels.push_back(levels.back() + 1);
      ++pos;
    } else if (text[pos] == '-') {
      levels.push_back(levels.back() - 1);
      ++pos;
    } else if (text.substr(pos, kUnicodeMinus.size()) == kUnicodeMinus) {
      levels.push_back(levels.back() - 1);
      pos += kUnicodeMinus.size();
    } else {
      parse_error(std::string("unexpected character '") + text[pos] + "'",
                  base + pos);
    }
  }
  return from_raw_levels(levels);
}

StackGraph parse_levels(std::string_view text, std::size_t base) {
  std::vector<std::int64_t> levels;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::size_t begin = pos;
    std::size_t end = comma;
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin == end) parse_error("empty level", base + begin);
    std::int64_t value = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      parse_error("malformed integer",
                  base + begin + static_cast<std::size_t>(ptr - first));
    }
    levels.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return from_raw_levels(levels);
}

void append_bracket(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('x');
    return;
  }
  out.push_back('(');
  append_bracket(t.left(), out);
  append_bracket(t.right(), out);
  out.push_back(')');
}

}  // namespace

TextFormat detect_text_format(std::string_view text) {
  text = trim(text);
  if (!text.empty() && (text.front() == '(' || text == "x")) {
    return TextFormat::Bracket;
  }
  if (text.find(',') != std::string_view::npos) return TextFormat::Levels;
  return TextFormat::Steps;
}

StackGraph parse_tree_text(std::string_view text, TextFormat format) {
  std::size_t lead = 0;
  while (lead < text.size() && is_space(text[lead])) ++lead;
  text = trim(text);
  if (text.empty()) parse_error("empty input", 0);
  switch (format) {
    case TextFormat::Bracket: return parse_bracket(text, lead);
    case TextFormat::Steps: return parse_steps(text, lead);
    case TextFormat::Levels: return parse_levels(text, lead);
  }
  throw Error(Errc::ParseError, "unknown format");
}

std::string print_tree_text(const StackGraph& s, TextFormat format) {
  switch (format) {
    case TextFormat::Bracket: {
      std::string out;
      out.reserve(s.nodes() + s.leaves() * 2);
      append_bracket(stack_graph_to_tree(s), out);
      return out;
    }
    case TextFormat::Steps:
      return s.step_string();
    case TextFormat::Levels: {
      std::string out;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out.push_back(',');
        out += std::to_string(s[k]);
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Enumeration and counting

namespace {

void enumerate_rec(std::vector<StackGraph::Level>& levels, std::size_t ups_left,
                   std::size_t downs_left, std::vector<StackGraph>& out) {
  if (ups_left == 0 && downs_left == 0) {
    out.push_back(detail::adopt_levels(levels));
    return;
  }
  const auto level = levels.back();
  if (ups_left > 0) {
    levels.push_back(level + 1);
    enumerate_rec(levels, ups_left - 1, downs_left, out);
    levels.pop_back();
  }
  if (downs_left > 0 && level >= 2) {
    levels.push_back(level - 1);
    enumerate_rec(levels, ups_left, downs_left - 1, out);
    levels.pop_back();
  }
}

}  // namespace

std::vector<StackGraph> enumerate_trees(std::size_t n, std::size_t cap) {
  if (n < 1) throw Error(Errc::BadLength, "leaf count must be at least 1");
  if (n > cap) {
    throw Error(Errc::CapExceeded, "enumeration of n=" + std::to_string(n) +
                                       " exceeds cap " + std::to_string(cap));
  }
  std::vector<StackGraph> out;
  out.reserve(static_cast<std::size_t>(catalan(n)));
  std::vector<StackGraph::Level> levels{0, 1};
  levels.reserve(2 * n);
  enumerate_rec(levels, n - 1, n - 1, out);
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt catalan(std::uint64_t n) {
  if (n < 1) throw Error(Errc::BadLength, "leaf count must be at least 1");
  return binomial(2 * n - 2, n - 1) / n;
}

void require_same_size(const StackGraph& a, const StackGraph& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::SizeMismatch,
                "trees have " + std::to_string(a.leaves()) + " and " +
                    std::to_string(b.leaves()) + " leaves");
  }
}

bool pointwise_leq(const StackGraph& a, const StackGraph& b) {
  require_same_size(a, b);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

StackGraph right_comb(std::size_t n) {
  std::vector<StackGraph::Level> levels;
  levels.reserve(2 * n);
  for (std::size_t k = 0; k <= n; ++k) levels.push_back(static_cast<int>(k));
  for (std::size_t k = n - 1; k >= 1; --k) levels.push_back(static_cast<int>(k));
  return detail::adopt_levels(std::move(levels));
}

StackGraph left_comb(std::size_t n) {
  std::vector<StackGraph::Level> levels{0, 1};
  levels.reserve(2 * n);
  for (std::size_t k = 1; k < n; ++k) {
    levels.push_back(2);
    levels.push_back(1);
  }
  return detail::adopt_levels(std::move(levels));
}

}  // namespace rotpath
