#include "rotpath/report.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "rotpath/error.hpp"
#include "rotpath/greedy.hpp"
#include "rotpath/mirror.hpp"
#include "rotpath/oracle.hpp"
#include "rotpath/random.hpp"

namespace rotpath {

namespace {

struct PairOutcome {
  StackGraph first;
  StackGraph second;
  std::size_t exact = 0;
  std::size_t greedy = 0;
  std::size_t one_sided = 0;
  bool lift_is_upper_bound = false;
  std::optional<bool> lift_is_minimal;
  std::optional<bool> unique_minimal;
  std::optional<bool> sorted_shortest;
  std::optional<bool> lift_count_minimal;
  bool mirror_ok = true;
  bool divergent = false;
};

constexpr int kNone = OrderIndex::kUnreachable;

void fill_greedy(PairOutcome& out, const GreedyEstimate& est) {
  out.greedy = est.rotations();
  out.one_sided = est.original.rotations();
  out.divergent = est.original.literal_reading_divergences +
                      est.mirrored.literal_reading_divergences >
                  0;
}

// All-pairs tables for one size, built once and shared read-only.
struct Tables {
  explicit Tables(std::size_t n, std::size_t cap)
      : index(order_diagram(n, cap)) {
    const std::size_t count = index.size();
    distance.reserve(count);
    above.reserve(count);
    mirrored.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      distance.push_back(index.distances_from(k));
      above.push_back(index.lift_distances_from(k));
      mirrored.push_back(index.index_of(mirror(index.node(k))));
    }
  }

  OrderIndex index;
  std::vector<std::vector<int>> distance;
  std::vector<std::vector<int>> above;  // above[src][dst]: lift distance
  std::vector<std::size_t> mirrored;
};

PairOutcome evaluate_indexed(const Tables& t, std::size_t a, std::size_t b) {
  PairOutcome out{t.index.node(a), t.index.node(b)};
  const auto est = greedy_estimate(out.first, out.second, {true});
  fill_greedy(out, est);
  out.exact = static_cast<std::size_t>(t.distance[a][b]);

  const auto& up_a = t.above[a];
  const auto& up_b = t.above[b];
  const std::size_t cl = t.index.index_of(est.original.common_lift);
  const std::size_t ma = t.mirrored[a];
  const std::size_t mb = t.mirrored[b];
  const std::size_t mcl = t.index.index_of(est.mirrored.common_lift);
  out.lift_is_upper_bound = up_a[cl] != kNone && up_b[cl] != kNone &&
                            t.above[ma][mcl] != kNone &&
                            t.above[mb][mcl] != kNone;

  std::size_t minimal_count = 0;
  bool cl_minimal = false;
  int best_peak = std::numeric_limits<int>::max();
  int best_valley = std::numeric_limits<int>::max();
  for (std::size_t u = 0; u < t.index.size(); ++u) {
    if (up_a[u] != kNone && up_b[u] != kNone) {
      best_peak = std::min(best_peak, up_a[u] + up_b[u]);
      bool minimal = true;
      for (const auto w : t.index.below(u)) {
        if (up_a[w] != kNone && up_b[w] != kNone) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        ++minimal_count;
        if (u == cl) cl_minimal = true;
      }
    }
    if (t.above[u][a] != kNone && t.above[u][b] != kNone) {
      best_valley = std::min(best_valley, t.above[u][a] + t.above[u][b]);
    }
  }
  out.lift_is_minimal = cl_minimal;
  out.unique_minimal = minimal_count == 1;
  out.sorted_shortest =
      static_cast<std::size_t>(std::min(best_peak, best_valley)) == out.exact;
  out.lift_count_minimal =
      up_a[cl] != kNone && up_b[cl] != kNone &&
      est.original.lifts_from_first.size() == static_cast<std::size_t>(up_a[cl]) &&
      est.original.lifts_from_second.size() == static_cast<std::size_t>(up_b[cl]);
  out.mirror_ok = (up_a[b] != kNone) == (t.above[mb][ma] != kNone);
  return out;
}

PairOutcome evaluate_sampled(const StackGraph& a, const StackGraph& b,
                             std::size_t cap) {
  PairOutcome out{a, b};
  const auto est = greedy_estimate(a, b, {true});
  fill_greedy(out, est);
  out.exact = exact_distance(a, b, std::max(cap, kExactDistanceCap));

  const auto up_a = lift_distances(a, cap);
  const auto up_b = lift_distances(b, cap);
  const auto cl_key = est.original.common_lift.step_string();
  const auto mcl_key = est.mirrored.common_lift.step_string();
  const auto mup_a = lift_distances(mirror(a), cap);
  const auto mup_b = lift_distances(mirror(b), cap);
  out.lift_is_upper_bound = up_a.contains(cl_key) && up_b.contains(cl_key) &&
                            mup_a.contains(mcl_key) && mup_b.contains(mcl_key);

  std::size_t best_peak = std::numeric_limits<std::size_t>::max();
  for (const auto& [key, d] : up_a) {
    if (auto it = up_b.find(key); it != up_b.end()) {
      best_peak = std::min(best_peak, d + it->second);
    }
  }
  std::size_t best_valley = std::numeric_limits<std::size_t>::max();
  const auto down_a = lower_distances(a, cap);
  const auto down_b = lower_distances(b, cap);
  for (const auto& [key, d] : down_a) {
    if (auto it = down_b.find(key); it != down_b.end()) {
      best_valley = std::min(best_valley, d + it->second);
    }
  }
  out.sorted_shortest = std::min(best_peak, best_valley) == out.exact;

  if (a.leaves() <= kUpperBoundCap) {
    const auto bounds = minimal_upper_bounds(a, b, kUpperBoundCap);
    out.unique_minimal = bounds.size() == 1;
    out.lift_is_minimal =
        std::find(bounds.begin(), bounds.end(), est.original.common_lift) !=
        bounds.end();
  }
  if (out.lift_is_upper_bound) {
    out.lift_count_minimal =
        est.original.lifts_from_first.size() == up_a.at(cl_key) &&
        est.original.lifts_from_second.size() == up_b.at(cl_key);
  } else {
    out.lift_count_minimal = false;
  }
  // a <= b must match mirror(b) <= mirror(a).
  const bool forward = up_a.contains(b.step_string());
  const bool backward = mup_b.contains(mirror(a).step_string());
  out.mirror_ok = forward == backward;
  return out;
}

template <typename Fn>
std::vector<PairOutcome> run_parallel(std::size_t count, std::size_t jobs,
                                      Fn evaluate) {
  std::vector<std::optional<PairOutcome>> slots(count);
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < count; k += jobs) slots[k] = evaluate(k);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<PairOutcome> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void tally(std::optional<std::size_t>& counter, const std::optional<bool>& flag,
           bool& computed) {
  if (!flag) {
    computed = false;
    return;
  }
  if (!counter) counter = 0;
  if (*flag) ++*counter;
}

SizeReport summarize(std::size_t n, bool exhaustive,
                     const std::vector<PairOutcome>& outcomes,
                     std::size_t max_listed) {
  SizeReport r;
  r.n = n;
  r.exhaustive = exhaustive;
  r.pairs = outcomes.size();
  bool have_minimal = true, have_unique = true, have_sorted = true,
       have_count = true;
  for (const auto& o : outcomes) {
    const long gap = static_cast<long>(o.greedy) - static_cast<long>(o.exact);
    ++r.gap_histogram[gap];
    ++r.one_sided_gap_histogram[static_cast<long>(o.one_sided) -
                                static_cast<long>(o.exact)];
    r.max_exact_distance = std::max(r.max_exact_distance, o.exact);
    if (gap < 0) ++r.greedy_below_exact;
    if (!o.lift_is_upper_bound) ++r.common_lift_not_upper_bound;
    tally(r.common_lift_is_minimal_upper_bound, o.lift_is_minimal, have_minimal);
    tally(r.unique_minimal_upper_bound, o.unique_minimal, have_unique);
    tally(r.sorted_shortest_path, o.sorted_shortest, have_sorted);
    tally(r.greedy_lift_count_minimal, o.lift_count_minimal, have_count);
    ++r.mirror_checks;
    if (!o.mirror_ok) ++r.mirror_failures;
    if (o.divergent) ++r.literal_reading_divergent_pairs;
    if (gap > 0) {
      ++r.counterexample_count;
      if (r.counterexamples.size() < max_listed) {
        r.counterexamples.push_back({o.first.step_string(),
                                     o.second.step_string(), o.greedy, o.exact});
      }
    }
  }
  if (!have_minimal) r.common_lift_is_minimal_upper_bound.reset();
  if (!have_unique) r.unique_minimal_upper_bound.reset();
  if (!have_sorted) r.sorted_shortest_path.reset();
  if (!have_count) r.greedy_lift_count_minimal.reset();
  if (n >= 12) {
    // 2m - 6 with m = n - 1 internal nodes, stated for m >= 11.
    const std::size_t bound = 2 * (n - 1) - 6;
    r.distance_bound_violations = 0;
    for (const auto& o : outcomes) {
      if (o.exact > bound) ++*r.distance_bound_violations;
    }
  }
  return r;
}

}  // namespace

bool ConjectureReport::requirements_hold() const {
  return std::all_of(sizes.begin(), sizes.end(), [](const SizeReport& s) {
    return s.greedy_below_exact == 0 && s.common_lift_not_upper_bound == 0;
  });
}

ConjectureReport conjecture_report(const ReportOptions& options) {
  if (options.n_max > options.cap) {
    throw Error(Errc::CapExceeded, "report for n=" +
                                       std::to_string(options.n_max) +
                                       " exceeds cap " +
                                       std::to_string(options.cap));
  }
  ConjectureReport report;
  report.options = options;
  for (std::size_t n = std::max<std::size_t>(1, options.n_min);
       n <= options.n_max; ++n) {
    if (n <= options.exhaustive_max) {
      const Tables tables(n, options.cap);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      for (std::size_t a = 0; a < tables.index.size(); ++a) {
        for (std::size_t b = a; b < tables.index.size(); ++b) {
          pairs.emplace_back(a, b);
        }
      }
      const auto outcomes =
          run_parallel(pairs.size(), options.jobs, [&](std::size_t k) {
            return evaluate_indexed(tables, pairs[k].first, pairs[k].second);
          });
      report.sizes.push_back(summarize(n, true, outcomes, options.max_listed));
    } else {
      // Pairs are drawn up front so the result does not depend on jobs.
      TreeGenerator gen(options.seed ^ (0x9E3779B97F4A7C15ULL * n));
      std::vector<std::pair<StackGraph, StackGraph>> pairs;
      for (std::size_t k = 0; k < options.samples; ++k) {
        StackGraph a = gen.next(n);
        StackGraph b = gen.next(n);
        pairs.emplace_back(std::move(a), std::move(b));
      }
      const auto outcomes =
          run_parallel(pairs.size(), options.jobs, [&](std::size_t k) {
            return evaluate_sampled(pairs[k].first, pairs[k].second,
                                    options.cap);
          });
      report.sizes.push_back(summarize(n, false, outcomes, options.max_listed));
    }
  }
  return report;
}

namespace {

nlohmann::json histogram_json(const std::map<long, std::size_t>& h) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [gap, count] : h) out[std::to_string(gap)] = count;
  return out;
}

nlohmann::json optional_json(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json rate_json(const std::optional<std::size_t>& v, std::size_t of) {
  if (!v || of == 0) return nullptr;
  return static_cast<double>(*v) / static_cast<double>(of);
}

std::string percent(const std::optional<std::size_t>& v, std::size_t of) {
  if (!v || of == 0) return "-";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2)
     << 100.0 * static_cast<double>(*v) / static_cast<double>(of) << "%";
  return os.str();
}

}  // namespace

nlohmann::json to_json(const ConjectureReport& report) {
  nlohmann::json out;
  const auto& o = report.options;
  out["options"] = {{"n_min", o.n_min},           {"n_max", o.n_max},
                    {"exhaustive_max", o.exhaustive_max},
                    {"samples", o.samples},       {"seed", o.seed},
                    {"max_listed", o.max_listed}, {"cap", o.cap}};
  out["requirements_hold"] = report.requirements_hold();
  out["notes"] = nlohmann::json::array(
      {"distance_bound_violations counts pairs with exact distance above "
       "2m-6, where m = n-1 is the number of internal nodes; checked only "
       "for m >= 11.",
       "Pairs are unordered and include identical pairs. Greedy counts are "
       "symmetric in argument order."});
  out["sizes"] = nlohmann::json::array();
  for (const auto& s : report.sizes) {
    nlohmann::json j;
    j["n"] = s.n;
    j["mode"] = s.exhaustive ? "exhaustive" : "sampled";
    j["pairs"] = s.pairs;
    j["gap_histogram"] = histogram_json(s.gap_histogram);
    j["one_sided_gap_histogram"] = histogram_json(s.one_sided_gap_histogram);
    j["max_exact_distance"] = s.max_exact_distance;
    j["greedy_below_exact"] = s.greedy_below_exact;
    j["common_lift_not_upper_bound"] = s.common_lift_not_upper_bound;
    j["common_lift_is_minimal_upper_bound"] =
        optional_json(s.common_lift_is_minimal_upper_bound);
    j["common_lift_is_minimal_upper_bound_rate"] =
        rate_json(s.common_lift_is_minimal_upper_bound, s.pairs);
    j["unique_minimal_upper_bound"] = optional_json(s.unique_minimal_upper_bound);
    j["unique_minimal_upper_bound_rate"] =
        rate_json(s.unique_minimal_upper_bound, s.pairs);
    j["sorted_shortest_path"] = optional_json(s.sorted_shortest_path);
    j["sorted_shortest_path_rate"] = rate_json(s.sorted_shortest_path, s.pairs);
    j["greedy_lift_count_minimal"] = optional_json(s.greedy_lift_count_minimal);
    j["greedy_lift_count_minimal_rate"] =
        rate_json(s.greedy_lift_count_minimal, s.pairs);
    j["mirror_checks"] = s.mirror_checks;
    j["mirror_failures"] = s.mirror_failures;
    j["literal_reading_divergent_pairs"] = s.literal_reading_divergent_pairs;
    j["distance_bound_violations"] = optional_json(s.distance_bound_violations);
    j["counterexample_count"] = s.counterexample_count;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : s.counterexamples) {
      j["counterexamples"].push_back({{"first", c.first},
                                      {"second", c.second},
                                      {"greedy", c.greedy},
                                      {"exact", c.exact}});
    }
    out["sizes"].push_back(std::move(j));
  }
  return out;
}

std::string to_text(const ConjectureReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(12) << "mode"
     << std::right << std::setw(9) << "pairs" << std::setw(10) << "exact=gr"
     << std::setw(9) << "max gap" << std::setw(10) << "CL=lub" << std::setw(10)
     << "lub uniq" << std::setw(10) << "sorted" << std::setw(10) << "min lifts"
     << std::setw(8) << "mirror" << std::setw(9) << "diverge" << std::setw(8)
     << "viol" << '\n';
  for (const auto& s : report.sizes) {
    const auto exact_hits = s.gap_histogram.count(0) ? s.gap_histogram.at(0) : 0;
    const long max_gap = s.gap_histogram.empty() ? 0 : s.gap_histogram.rbegin()->first;
    os << std::left << std::setw(4) << s.n << std::setw(12)
       << (s.exhaustive ? "exhaustive" : "sampled") << std::right
       << std::setw(9) << s.pairs << std::setw(10)
       << percent(exact_hits, s.pairs) << std::setw(9) << max_gap
       << std::setw(10) << percent(s.common_lift_is_minimal_upper_bound, s.pairs)
       << std::setw(10) << percent(s.unique_minimal_upper_bound, s.pairs)
       << std::setw(10) << percent(s.sorted_shortest_path, s.pairs)
       << std::setw(10) << percent(s.greedy_lift_count_minimal, s.pairs)
       << std::setw(8) << s.mirror_failures << std::setw(9)
       << s.literal_reading_divergent_pairs << std::setw(8)
       << s.greedy_below_exact + s.common_lift_not_upper_bound << '\n';
  }
  for (const auto& s : report.sizes) {
    if (s.distance_bound_violations) {
      os << "n=" << s.n << ": " << *s.distance_bound_violations
         << " pairs above 2m-6 = " << 2 * (s.n - 1) - 6
         << " (m = n-1 internal nodes)\n";
    }
  }
  os << "requirements (greedy >= exact, common lift is an upper bound): "
     << (report.requirements_hold() ? "hold" : "VIOLATED") << '\n';
  return os.str();
}

}  // namespace rotpath
