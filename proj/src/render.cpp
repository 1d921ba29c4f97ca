#include "rotpath/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rotpath/error.hpp"

namespace rotpath {

namespace {

constexpr int kStep = 24;
constexpr int kMargin = 8;
constexpr int kLegendRow = 16;

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

int max_level(const StackGraph& s) {
  return *std::max_element(s.levels().begin(), s.levels().end());
}

void polyline(std::ostream& os, const StackGraph& s, int x0, int y_base,
              int dx, int dy, const std::string& color, int width) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
     << width << "\" points=\"";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) os << ' ';
    os << x0 + dx * static_cast<int>(k) << ',' << y_base - dy * s[k];
  }
  os << "\"/>\n";
}

// Leaf x positions in order, internal nodes centred over their children,
// depth downwards.
struct TreeLayout {
  struct Point {
    double x;
    int depth;
  };
  std::vector<Point> points;  // post-order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // parent, child
  int max_depth = 0;
};

TreeLayout layout_tree(const StackGraph& s) {
  TreeLayout out;
  const std::size_t n_nodes = s.nodes();
  out.points.resize(n_nodes);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> parent(n_nodes, n_nodes);
  int next_leaf = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const std::size_t v = k - 1;
    if (s[k] > s[k - 1]) {
      out.points[v] = {static_cast<double>(next_leaf++), 0};
      stack.push_back(v);
    } else {
      const std::size_t right = stack.back();
      stack.pop_back();
      const std::size_t left = stack.back();
      stack.back() = v;
      out.points[v] = {(out.points[left].x + out.points[right].x) / 2, 0};
      parent[left] = parent[right] = v;
      out.edges.emplace_back(v, left);
      out.edges.emplace_back(v, right);
    }
  }
  // Post-order puts parents after children; walk backwards for depths.
  for (std::size_t v = n_nodes; v-- > 0;) {
    if (parent[v] != n_nodes) out.points[v].depth = out.points[parent[v]].depth + 1;
    out.max_depth = std::max(out.max_depth, out.points[v].depth);
  }
  return out;
}

}  // namespace

std::string stack_graph_svg(const std::vector<StyledGraph>& graphs) {
  if (graphs.empty()) throw Error(Errc::BadLength, "nothing to draw");
  for (const auto& g : graphs) require_same_size(graphs.front().graph, g.graph);
  int top = 0;
  for (const auto& g : graphs) top = std::max(top, max_level(g.graph));
  const int positions = static_cast<int>(graphs.front().graph.nodes());
  const int legend = kLegendRow * static_cast<int>(graphs.size());
  const int width = 2 * kMargin + kStep * std::max(positions, 1);
  const int height = 2 * kMargin + legend + kStep * top;
  const int y_base = height - kMargin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
     << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int level = 0; level <= top; ++level) {
    const int y = y_base - kStep * level;
    os << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\""
       << width - kMargin << "\" y2=\"" << y << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto& g : graphs) {
    polyline(os, g.graph, kMargin, y_base, kStep, kStep, g.color, 2);
  }
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const int y = kMargin + kLegendRow * static_cast<int>(k);
    os << "<line x1=\"" << kMargin << "\" y1=\"" << y + 8 << "\" x2=\""
       << kMargin + 16 << "\" y2=\"" << y + 8 << "\" stroke=\""
       << graphs[k].color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kMargin + 20 << "\" y=\"" << y + 12
       << "\" font-family=\"sans-serif\" font-size=\"11\">"
       << escape_xml(graphs[k].label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string tree_dot(const StackGraph& s) {
  std::ostringstream os;
  os << "digraph tree {\n";
  os << "  node [label=\"\"];\n";
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const bool leaf = s[k] > s[k - 1];
    os << "  " << k << " [leaf=" << (leaf ? "true" : "false") << ", shape="
       << (leaf ? "circle, style=filled, fillcolor=black, width=0.15"
                : "point, width=0.08")
       << "];\n";
    if (leaf) {
      stack.push_back(k);
    } else {
      const std::size_t right = stack.back();
      stack.pop_back();
      const std::size_t left = stack.back();
      stack.back() = k;
      edges.emplace_back(k, left);
      edges.emplace_back(k, right);
    }
  }
  for (const auto& [parent, child] : edges) {
    os << "  " << parent << " -> " << child << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string path_filmstrip(const RotationPath& path) {
  constexpr int kUnit = 10;      // px per leaf / per position
  constexpr int kDepthStep = 14;
  constexpr int kGap = 16;
  constexpr int kCaption = 14;
  if (path.graphs.empty()) throw Error(Errc::BadLength, "empty path");
  const StackGraph& first = path.graphs.front();
  int top = 0;
  int depth = 0;
  std::vector<TreeLayout> layouts;
  for (const auto& g : path.graphs) {
    require_same_size(first, g);
    top = std::max(top, max_level(g));
    layouts.push_back(layout_tree(g));
    depth = std::max(depth, layouts.back().max_depth);
  }
  const int graph_w = kUnit * std::max<int>(1, static_cast<int>(first.nodes()));
  const int tree_w = 2 * kUnit * static_cast<int>(first.leaves());
  const int panel_w = std::max(graph_w, tree_w) + 2 * kMargin;
  const int tree_h = kDepthStep * depth + 2 * kMargin;
  const int graph_h = kUnit * top + 2 * kMargin;
  const int panel_h = tree_h + graph_h + kCaption;
  const int count = static_cast<int>(path.graphs.size());
  const int width = count * panel_w + (count + 1) * kGap;
  const int height = panel_h + 2 * kGap;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
     << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int p = 0; p < count; ++p) {
    const int x0 = kGap + p * (panel_w + kGap);
    const int y0 = kGap;
    const bool peak = path.peak && *path.peak == static_cast<std::size_t>(p);
    os << "<g class=\"panel\" id=\"panel-" << p << "\">\n";
    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << panel_w
       << "\" height=\"" << panel_h << "\" fill=\"none\" stroke=\""
       << (peak ? "#d62728" : "#cccccc") << "\" stroke-width=\""
       << (peak ? 3 : 1) << "\"/>\n";
    const auto& layout = layouts[static_cast<std::size_t>(p)];
    const int tree_x = x0 + kMargin + (panel_w - 2 * kMargin - tree_w) / 2 + kUnit;
    auto px = [&](std::size_t v) {
      return tree_x + static_cast<int>(2 * kUnit * layout.points[v].x);
    };
    auto py = [&](std::size_t v) {
      return y0 + kMargin + kDepthStep * layout.points[v].depth;
    };
    for (const auto& [parent, child] : layout.edges) {
      os << "<line x1=\"" << px(parent) << "\" y1=\"" << py(parent)
         << "\" x2=\"" << px(child) << "\" y2=\"" << py(child)
         << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t v = 0; v < layout.points.size(); ++v) {
      const bool leaf = path.graphs[static_cast<std::size_t>(p)][v + 1] >
                        path.graphs[static_cast<std::size_t>(p)][v];
      os << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\""
         << (leaf ? 3 : 2) << "\" fill=\"" << (leaf ? "black" : "#777777")
         << "\"/>\n";
    }
    const int gx = x0 + (panel_w - graph_w) / 2;
    const int gy = y0 + tree_h + graph_h - kMargin;
    polyline(os, path.graphs[static_cast<std::size_t>(p)], gx, gy, kUnit,
             kUnit, peak ? kLiftColor : kFirstColor, 2);
    std::string caption;
    if (p > 0) {
      const auto& step = path.steps[static_cast<std::size_t>(p - 1)];
      caption = std::string(to_string(step.direction)) + " (" +
                std::to_string(step.site.i) + "," +
                std::to_string(step.site.j) + ")";
    }
    if (peak) caption += caption.empty() ? "CL" : " CL";
    os << "<text x=\"" << x0 + 4 << "\" y=\"" << y0 + panel_h - 4
       << "\" font-family=\"sans-serif\" font-size=\"10\">" << caption
       << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string hasse_dot(const OrderDiagram& diagram) {
  const OrderIndex index(diagram);
  const auto height = index.heights();
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t k = 0; k < diagram.nodes.size(); ++k) {
    ranks[height[k]].push_back(k);
  }
  std::ostringstream os;
  os << "digraph order_n" << diagram.n << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < diagram.nodes.size(); ++k) {
    os << "  n" << k << " [label=\""
       << print_tree_text(diagram.nodes[k], TextFormat::Bracket)
       << "\", steps=\"" << diagram.nodes[k].step_string() << "\"];\n";
  }
  for (const auto& [h, members] : ranks) {
    os << "  { rank=same;";
    for (auto k : members) os << " n" << k << ';';
    os << " }\n";
  }
  for (const auto& e : diagram.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"(" << e.site.i
       << "," << e.site.j << ")\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rotpath
