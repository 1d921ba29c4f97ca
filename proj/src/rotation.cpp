#include "rotpath/rotation.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "rotpath/error.hpp"

namespace rotpath {

const char* to_string(Direction d) noexcept {
  return d == Direction::Lift ? "lift" : "lower";
}

bool is_lift_site(std::span<const StackGraph::Level> s, const LiftSite& site) {
  const auto [i, j] = site;
  if (i < 1 || i + 2 > j || j >= s.size()) return false;
  const auto level = s[i];
  if (s[j] != level) return false;
  if (s[i - 1] != level + 1 || s[i + 1] != level + 1 || s[j - 1] != level + 1) {
    return false;
  }
  for (std::size_t k = i + 1; k < j; ++k) {
    if (s[k] <= level) return false;
  }
  return true;
}

bool is_lift_site(const StackGraph& s, const LiftSite& site) {
  return is_lift_site(s.levels(), site);
}

std::vector<LiftSite> lift_sites(const StackGraph& s) {
  // open[level] holds the position of a valley at that level still waiting
  // for the graph to come back down to it.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> open(s.leaves() + 2, kNone);
  std::vector<LiftSite> sites;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const auto level = static_cast<std::size_t>(s[k]);
    if (s[k] < s[k - 1]) {
      if (open[level] != kNone) {
        sites.push_back({open[level], k});
        open[level] = kNone;
      }
      if (k + 1 < s.size() && s[k + 1] > s[k]) open[level] = k;
    }
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::vector<LiftSite> lower_sites(const StackGraph& s) {
  // In the lifted graph the site shows up as an up-step into i, a segment
  // staying above s[i-1] that first returns to s[i-1] at j-1, then a
  // down-step into j. The level under the segment must stay >= 1.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> open(s.leaves() + 2, kNone);
  std::vector<LiftSite> sites;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const auto level = static_cast<std::size_t>(s[k]);
    if (s[k] > s[k - 1]) {
      // Up-step from k-1: remember where the excursion above s[k-1] began.
      if (s[k - 1] >= 2) open[level - 1] = k;
    } else if (open[level] != kNone) {
      const std::size_t i = open[level];
      open[level] = kNone;
      if (k + 1 < s.size() && s[k + 1] < s[k]) sites.push_back({i, k + 1});
    }
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

StackGraph apply_lift(const StackGraph& s, const LiftSite& site) {
  if (!is_lift_site(s, site)) {
    throw Error(Errc::InvalidSite, "(" + std::to_string(site.i) + ", " +
                                       std::to_string(site.j) +
                                       ") is not a lift site");
  }
  std::vector<StackGraph::Level> r(s.levels().begin(), s.levels().end());
  for (std::size_t k = site.i; k < site.j; ++k) r[k] = s[k + 1] + 1;
  return detail::adopt_levels(std::move(r));
}

StackGraph apply_lower(const StackGraph& s, const LiftSite& site) {
  const auto [i, j] = site;
  auto invalid = [&]() -> Error {
    return Error(Errc::InvalidSite, "(" + std::to_string(i) + ", " +
                                        std::to_string(j) +
                                        ") has no pre-image under lift");
  };
  if (i < 1 || i + 2 > j || j > s.nodes()) throw invalid();
  // Shape checks on the lifted graph; together they make the reconstructed
  // pre-image a valid graph with (i, j) as a lift site.
  const auto base = s[j];
  if (base < 1 || s[i - 1] != base + 1 || s[j - 1] != base + 1) throw invalid();
  for (std::size_t k = i; k + 1 < j; ++k) {
    if (s[k] <= base + 1) throw invalid();
  }
  std::vector<StackGraph::Level> r(s.levels().begin(), s.levels().end());
  r[i] = base;
  for (std::size_t k = i; k + 1 < j; ++k) r[k + 1] = s[k] - 1;
  return detail::adopt_levels(std::move(r));
}

std::vector<StackGraph> rotation_neighbors(const StackGraph& s) {
  std::vector<StackGraph> out;
  for (const auto& site : lift_sites(s)) out.push_back(apply_lift(s, site));
  for (const auto& site : lower_sites(s)) out.push_back(apply_lower(s, site));
  return out;
}

namespace {

// First position k > i with s[k] = s[i], or 0 when none exists.
std::size_t first_return(const StackGraph& s, std::size_t i) {
  for (std::size_t k = i + 1; k < s.size(); ++k) {
    if (s[k] == s[i]) return k;
  }
  return 0;
}

std::optional<RotationStep> lift_between(const StackGraph& low,
                                         const StackGraph& high,
                                         std::size_t i) {
  const LiftSite site{i, first_return(low, i)};
  if (!is_lift_site(low, site)) return std::nullopt;
  // apply_lift only touches [i, j); compare that window.
  for (std::size_t k = site.i; k < site.j; ++k) {
    if (high[k] != low[k + 1] + 1) return std::nullopt;
  }
  for (std::size_t k = site.j; k < low.size(); ++k) {
    if (high[k] != low[k]) return std::nullopt;
  }
  return RotationStep{Direction::Lift, site};
}

}  // namespace

std::optional<RotationStep> classify_step(const StackGraph& a,
                                          const StackGraph& b) {
  require_same_size(a, b);
  // A lift at (i, j) leaves everything before i alone and raises s[i] by 2,
  // so the first differing position is i.
  std::size_t lo = 0;
  while (lo < a.size() && a[lo] == b[lo]) ++lo;
  if (lo == a.size()) return std::nullopt;
  if (a[lo] < b[lo]) return lift_between(a, b, lo);
  auto step = lift_between(b, a, lo);
  if (step) step->direction = Direction::Lower;
  return step;
}

PathReport verify_path(const RotationPath& path, const StackGraph& src,
                       const StackGraph& dst) {
  PathReport report;
  if (path.graphs.empty()) {
    report.failure = "path has no graphs";
    return report;
  }
  if (path.steps.size() + 1 != path.graphs.size()) {
    report.failure = "path has " + std::to_string(path.graphs.size()) +
                     " graphs but " + std::to_string(path.steps.size()) +
                     " steps";
    return report;
  }
  report.endpoints_match = path.graphs.front() == src && path.graphs.back() == dst;
  bool steps_ok = true;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const auto& a = path.graphs[k];
    const auto& b = path.graphs[k + 1];
    if (a.size() != b.size()) {
      report.failure = "graph " + std::to_string(k + 1) + " has a different size";
      steps_ok = false;
      break;
    }
    const auto actual = classify_step(a, b);
    if (!actual || *actual != path.steps[k]) {
      report.failure = "step " + std::to_string(k) +
                       " does not match the annotated rotation";
      steps_ok = false;
      break;
    }
  }
  // Count runs of equal direction: sorted means at most two.
  std::size_t runs = 0;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const auto d = path.steps[k].direction;
    (d == Direction::Lift ? report.lifts : report.lowers)++;
    if (k == 0 || path.steps[k - 1].direction != d) ++runs;
  }
  report.sorted = runs <= 2;
  if (steps_ok && !report.endpoints_match) {
    report.failure = "path endpoints do not match the query";
  }
  report.valid = steps_ok && report.endpoints_match;
  return report;
}

void write_path_jsonl(std::ostream& out, const RotationPath& path) {
  for (std::size_t k = 0; k < path.graphs.size(); ++k) {
    nlohmann::json line;
    line["levels"] = std::vector<int>(path.graphs[k].levels().begin(),
                                      path.graphs[k].levels().end());
    if (k < path.steps.size()) {
      const auto& step = path.steps[k];
      line["step"] = {{"dir", to_string(step.direction)},
                      {"i", step.site.i},
                      {"j", step.site.j}};
    } else {
      line["step"] = nullptr;
    }
    out << line.dump() << '\n';
  }
}

RotationPath read_path_jsonl(std::istream& in) {
  RotationPath path;
  std::string text;
  std::size_t line_no = 0;
  bool saw_final = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (saw_final) {
      throw Error(Errc::ParseError, where + ": graph after the final line",
                  line_no);
    }
    nlohmann::json line;
    try {
      line = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, where + ": " + e.what(), line_no);
    }
    if (!line.is_object() || !line.contains("levels") ||
        !line["levels"].is_array()) {
      throw Error(Errc::ParseError, where + ": missing \"levels\" array",
                  line_no);
    }
    std::vector<std::int64_t> levels;
    for (const auto& v : line["levels"]) {
      if (!v.is_number_integer()) {
        throw Error(Errc::ParseError, where + ": non-integer level", line_no);
      }
      levels.push_back(v.get<std::int64_t>());
    }
    try {
      path.graphs.push_back(
          validate_stack_graph(std::span<const std::int64_t>(levels)));
    } catch (const Error& e) {
      throw Error(Errc::InvalidTree, where + ": " + e.what(), line_no);
    }
    const auto step = line.value("step", nlohmann::json());
    if (step.is_null()) {
      saw_final = true;
      continue;
    }
    if (!step.is_object() || !step.contains("dir") || !step.contains("i") ||
        !step.contains("j") || !step["i"].is_number_unsigned() ||
        !step["j"].is_number_unsigned()) {
      throw Error(Errc::ParseError, where + ": malformed \"step\"", line_no);
    }
    const auto dir = step["dir"].get<std::string>();
    if (dir != "lift" && dir != "lower") {
      throw Error(Errc::ParseError, where + ": unknown direction " + dir,
                  line_no);
    }
    path.steps.push_back(
        {dir == "lift" ? Direction::Lift : Direction::Lower,
         {step["i"].get<std::size_t>(), step["j"].get<std::size_t>()}});
  }
  if (path.graphs.empty()) throw Error(Errc::ParseError, "empty path file");
  if (!saw_final) {
    throw Error(Errc::ParseError, "last line must carry \"step\": null",
                line_no);
  }
  return path;
}

}  // namespace rotpath
