#include "octal/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

#include "octal/closed_form.hpp"

namespace octal::verify {

using nlohmann::ordered_json;

ordered_json Report::to_json(bool timing) const {
  ordered_json doc;
  doc["suite"] = suite;
  doc["passed"] = passed();
  doc["cases"] = cases;
  ordered_json list = ordered_json::array();
  for (const auto& f : failures) {
    list.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  doc["failures"] = std::move(list);
  doc["elapsed_ms"] = timing ? ordered_json(elapsed_ms) : ordered_json(nullptr);
  doc["cache_entries"] = cache_entries;
  for (const auto& [key, value] : extras.items()) doc[key] = value;
  return doc;
}

namespace {

const OctalCode& code033() {
  static const OctalCode code = OctalCode::parse("0.33");
  return code;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void expect(Report& r, const std::string& input, GrundyValue expected, GrundyValue actual) {
  ++r.cases;
  if (expected != actual) {
    r.failures.push_back({input, std::to_string(expected), std::to_string(actual)});
  }
}

std::string describe(const BistarSpec& b) { return to_string(GraphSpec{b}); }
std::string describe(const StarSpec& s) { return to_string(s); }

StarSpec reduced_star(unsigned ones, unsigned twos) {
  std::vector<unsigned> arms(ones, 1);
  arms.insert(arms.end(), twos, 2);
  return StarSpec(std::move(arms));
}

// Every sorted multiset of at most `max_arms` lengths from 1..max_len.
void arm_multisets(std::size_t max_arms, unsigned max_len, std::vector<unsigned>& prefix,
                   std::vector<StarSpec>& out) {
  out.emplace_back(prefix);
  if (prefix.size() == max_arms) return;
  const unsigned from = prefix.empty() ? 1 : prefix.back();
  for (unsigned len = from; len <= max_len; ++len) {
    prefix.push_back(len);
    arm_multisets(max_arms, max_len, prefix, out);
    prefix.pop_back();
  }
}

// Class representatives read off the class grids, in table order.
struct Representative {
  StarSpec star;
  const char* label;
};

std::array<Representative, 8> sim1_representatives() {
  return {{{reduced_star(4, 0), "S_{1,1,1,1}"},
           {reduced_star(3, 0), "S_{1,1,1}"},
           {StarSpec{}, "P_1"},
           {reduced_star(0, 5), "S_{2,2,2,2,2}"},
           {reduced_star(1, 0), "P_2"},
           {reduced_star(2, 1), "S_{1,1,2}"},
           {reduced_star(1, 5), "S_{1,2,2,2,2,2}"},
           {reduced_star(3, 1), "S_{1,1,1,2}"}}};
}

std::array<Representative, 10> sim2_representatives() {
  return {{{reduced_star(0, 4), "S_{2,2,2,2}"},
           {reduced_star(4, 0), "S_{1,1,1,1}"},
           {reduced_star(1, 4), "S_{1,2,2,2,2}"},
           {StarSpec{}, "P_1"},
           {reduced_star(3, 0), "S_{1,1,1}"},
           {reduced_star(0, 5), "S_{2,2,2,2,2}"},
           {reduced_star(1, 0), "P_2"},
           {reduced_star(2, 1), "S_{1,1,2}"},
           {reduced_star(1, 5), "S_{1,2,2,2,2,2}"},
           {reduced_star(3, 1), "S_{1,1,1,2}"}}};
}

}  // namespace

Report paths_cycles(std::size_t n_max) {
  Stopwatch clock;
  Report r;
  r.suite = "paths";
  EvalCache cache(code033());
  for (std::size_t n = 0; n <= n_max; ++n) {
    expect(r, "path:" + std::to_string(n), static_cast<GrundyValue>(n % 3),
           grundy(build_path(n), code033(), cache));
  }
  for (std::size_t n = 3; n <= n_max; ++n) {
    expect(r, "cycle:" + std::to_string(n), static_cast<GrundyValue>(n % 3),
           grundy(build_cycle(n), code033(), cache));
  }
  r.cache_entries = cache.size();
  r.elapsed_ms = clock.ms();
  return r;
}

Report star_table(std::size_t max_arms) {
  if (max_arms < 3) throw std::invalid_argument("star table check needs max_arms >= 3");
  Stopwatch clock;
  Report r;
  r.suite = "stars";

  // Rows 0-5 of the reference grid, column j = number of length-2 arms.
  static const std::vector<std::vector<GrundyValue>> kFigure = {
      {1}, {2, 0}, {0, 1, 2}, {1, 2, 0, 1}, {0, 3, 1, 2, 0}, {1, 2, 0, 3, 1, 2}};
  std::size_t figure_entries = 0;
  for (std::size_t k = 0; k < kFigure.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const auto star = reduced_star(static_cast<unsigned>(k - j), static_cast<unsigned>(j));
      expect(r, "figure " + describe(star), kFigure[k][j], c033::star_table_value(k, j));
      ++figure_entries;
    }
  }

  std::size_t pattern_rows = 0;
  for (std::size_t k = 6; k <= 12; ++k) {
    std::string row = k % 2 ? "1203" : "03120";
    const std::string tail = k % 2 ? "12" : "30";
    while (row.size() < k + 1) row += tail;
    row.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      expect(r, "row " + std::to_string(k) + " col " + std::to_string(j),
             static_cast<GrundyValue>(row[j] - '0'), c033::star_table_value(k, j));
    }
    ++pattern_rows;
  }

  EvalCache cache(code033());
  std::size_t engine_cases = 0;
  for (std::size_t k = 0; k <= max_arms; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const auto star = reduced_star(static_cast<unsigned>(k - j), static_cast<unsigned>(j));
      expect(r, describe(star), grundy(realize_star(star), code033(), cache),
             c033::star_grundy(star));
      ++engine_cases;
    }
  }

  r.cache_entries = cache.size();
  r.extras["figure_entries"] = figure_entries;
  r.extras["pattern_rows"] = pattern_rows;
  r.extras["engine_cases"] = engine_cases;
  r.elapsed_ms = clock.ms();
  return r;
}

Report bistars(const BistarBounds& bounds) {
  Stopwatch clock;
  Report r;
  r.suite = "bistars";
  EvalCache cache(code033());

  std::vector<StarSpec> sides{StarSpec::absent()};
  std::vector<unsigned> prefix;
  arm_multisets(bounds.max_arms, bounds.max_arm_length, prefix, sides);

  std::set<std::pair<int, int>> cells1;
  std::set<std::pair<int, int>> cells2;
  std::size_t sweep_cases = 0;
  for (const auto& left : sides) {
    for (const auto& right : sides) {
      for (unsigned m = 0; m <= bounds.max_middle; ++m) {
        const BistarSpec spec{left, m, right};
        expect(r, describe(spec), grundy(realize_bistar(spec), code033(), cache),
               c033::bistar_grundy(spec));
        ++sweep_cases;
        if (m % 3 == 1) {
          cells1.emplace(static_cast<int>(c033::classify_sim1(left)),
                         static_cast<int>(c033::classify_sim1(right)));
        } else if (m % 3 == 2 && m > 0) {
          cells2.emplace(static_cast<int>(c033::classify_sim2(left)),
                         static_cast<int>(c033::classify_sim2(right)));
        }
      }
    }
  }

  // One representative pair per table cell, each checked against the cell
  // itself as well as the engine.
  const auto reps1 = sim1_representatives();
  for (std::size_t i = 0; i < reps1.size(); ++i) {
    const auto cls = c033::classify_sim1(reps1[i].star);
    if (cls != c033::kAllSim1[i]) {
      r.failures.push_back({std::string("class of ") + reps1[i].label,
                            c033::to_string(c033::kAllSim1[i]), c033::to_string(cls)});
    }
  }
  std::size_t rep1_cells = 0;
  for (std::size_t a = 0; a < reps1.size(); ++a) {
    for (std::size_t b = 0; b < reps1.size(); ++b) {
      const BistarSpec spec{reps1[a].star, 1, reps1[b].star};
      const auto cell = c033::table1_lookup(c033::kAllSim1[a], c033::kAllSim1[b],
                                            c033::star_grundy(reps1[a].star),
                                            c033::star_grundy(reps1[b].star));
      expect(r,
             std::string("table1 ") + c033::to_string(c033::kAllSim1[a]) + "," +
                 c033::to_string(c033::kAllSim1[b]) + " " + describe(spec),
             grundy(realize_bistar(spec), code033(), cache), cell);
      cells1.emplace(static_cast<int>(a), static_cast<int>(b));
      ++rep1_cells;
    }
  }

  const auto reps2 = sim2_representatives();
  for (std::size_t i = 0; i < reps2.size(); ++i) {
    const auto cls = c033::classify_sim2(reps2[i].star);
    if (cls != c033::kAllSim2[i]) {
      r.failures.push_back({std::string("class of ") + reps2[i].label,
                            c033::to_string(c033::kAllSim2[i]), c033::to_string(cls)});
    }
  }
  std::size_t rep2_cells = 0;
  for (std::size_t a = 0; a < reps2.size(); ++a) {
    for (std::size_t b = 0; b < reps2.size(); ++b) {
      const BistarSpec spec{reps2[a].star, 2, reps2[b].star};
      const auto cell = c033::table2_lookup(c033::kAllSim2[a], c033::kAllSim2[b],
                                            c033::star_grundy(reps2[a].star),
                                            c033::star_grundy(reps2[b].star));
      expect(r,
             std::string("table2 ") + c033::to_string(c033::kAllSim2[a]) + "," +
                 c033::to_string(c033::kAllSim2[b]) + " " + describe(spec),
             grundy(realize_bistar(spec), code033(), cache), cell);
      cells2.emplace(static_cast<int>(a), static_cast<int>(b));
      ++rep2_cells;
    }
  }

  if (cells1.size() != 64) {
    r.failures.push_back({"table1 coverage", "64", std::to_string(cells1.size())});
  }
  if (cells2.size() != 100) {
    r.failures.push_back({"table2 coverage", "100", std::to_string(cells2.size())});
  }

  r.cache_entries = cache.size();
  r.extras["sweep_cases"] = sweep_cases;
  r.extras["table1_cells_checked"] = rep1_cells;
  r.extras["table2_cells_checked"] = rep2_cells;
  r.extras["table1_cells_covered"] = cells1.size();
  r.extras["table2_cells_covered"] = cells2.size();
  r.elapsed_ms = clock.ms();
  return r;
}

BistarSpec counterexample_bistar() { return {StarSpec({1, 1}), 2, StarSpec({1, 2})}; }

Vertex counterexample_vertex() {
  // realize_bistar lays out the left star, then the right center followed by
  // its arms in sorted order; the length-2 arm starts after the length-1 arm.
  const auto spec = counterexample_bistar();
  const auto right_center = static_cast<Vertex>(spec.left.vertex_count());
  return right_center + 2;
}

Report counterexample() {
  Stopwatch clock;
  Report r;
  r.suite = "counterexample";
  EvalCache cache(code033());
  const auto spec = counterexample_bistar();
  const Graph base = realize_bistar(spec);
  const Vertex u = counterexample_vertex();

  const auto base_value = grundy(base, code033(), cache);
  ++r.cases;
  if (base_value == 0) r.failures.push_back({describe(spec), "N", "P"});

  const Graph at_u = attach_path(base, u, 3);
  const auto u_value = grundy(at_u, code033(), cache);
  ++r.cases;
  if (u_value != 0) {
    r.failures.push_back({describe(spec) + " + P_3 at u", "P", "N"});
  }

  const Vertex left_center = 0;
  const auto right_center = static_cast<Vertex>(spec.left.vertex_count());
  expect(r, describe(spec) + " + P_3 at left center", base_value,
         grundy(attach_path(base, left_center, 3), code033(), cache));
  expect(r, describe(spec) + " + P_3 at right center", base_value,
         grundy(attach_path(base, right_center, 3), code033(), cache));

  r.cache_entries = cache.size();
  r.extras["base_vertices"] = base.vertex_count();
  r.extras["base_value"] = base_value;
  r.extras["u"] = u;
  r.extras["attached_vertices"] = at_u.vertex_count();
  r.extras["attached_value"] = u_value;
  r.elapsed_ms = clock.ms();
  return r;
}

CaterpillarSpec grundy_ten_caterpillar() {
  return {37, {2, 4, 6, 8, 10, 12, 14, 18, 20, 22, 24, 26, 28, 30, 34}};
}

Report caterpillar(std::size_t cache_cap) {
  Stopwatch clock;
  Report r;
  r.suite = "caterpillar";
  EvalCache cache(code033(), cache_cap);
  const auto spec = grundy_ten_caterpillar();
  const Graph g = realize_caterpillar(spec);
  const auto value = grundy(g, code033(), cache);
  expect(r, to_string(GraphSpec{spec}), 10, value);

  CaterpillarSpec mirror{spec.spine_length, {}};
  for (unsigned p : spec.leg_positions) mirror.leg_positions.push_back(spec.spine_length - 1 - p);
  std::sort(mirror.leg_positions.begin(), mirror.leg_positions.end());
  expect(r, to_string(GraphSpec{mirror}), 10,
         grundy(realize_caterpillar(mirror), code033(), cache));

  const CaterpillarSpec bare{spec.spine_length, {}};
  expect(r, to_string(GraphSpec{bare}), 1, grundy(realize_caterpillar(bare), code033(), cache));

  r.cache_entries = cache.size();
  r.extras["vertices"] = g.vertex_count();
  r.extras["value"] = value;
  r.elapsed_ms = clock.ms();
  return r;
}

Report heap_path(const std::vector<OctalCode>& codes, std::size_t n_max) {
  Stopwatch clock;
  Report r;
  r.suite = "heap-path";
  for (const auto& code : codes) {
    EvalCache cache(code);
    HeapGrundyTable heaps(code);
    for (std::size_t n = 0; n <= n_max; ++n) {
      expect(r, code.str() + " path:" + std::to_string(n), heaps.value(n),
             grundy(build_path(n), code, cache));
    }
    r.cache_entries += cache.size();
  }
  r.elapsed_ms = clock.ms();
  return r;
}

SearchResult search_caterpillars(std::size_t spine_max, GrundyValue target,
                                 const SearchLimits& limits) {
  SearchResult out;
  auto cache = std::make_unique<EvalCache>(code033(), limits.cache_cap);
  for (std::size_t spine = 1; spine <= spine_max; ++spine) {
    const std::size_t interior = spine >= 2 ? spine - 2 : 0;
    if (interior >= 63) throw std::invalid_argument("spine too long to enumerate");
    const std::uint64_t masks = std::uint64_t{1} << interior;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::uint64_t mirrored = 0;
      for (std::size_t i = 0; i < interior; ++i) {
        if (mask >> i & 1) mirrored |= std::uint64_t{1} << (interior - 1 - i);
      }
      if (mirrored < mask) continue;
      if (limits.max_instances && out.examined == limits.max_instances) {
        out.truncated = true;
        return out;
      }
      CaterpillarSpec spec{static_cast<unsigned>(spine), {}};
      for (std::size_t i = 0; i < interior; ++i) {
        if (mask >> i & 1) spec.leg_positions.push_back(static_cast<unsigned>(i + 1));
      }
      ++out.examined;
      GrundyValue value = 0;
      try {
        value = grundy(realize_caterpillar(spec), code033(), *cache);
      } catch (const ResourceLimitError&) {
        out.skipped.push_back(spec);
        cache = std::make_unique<EvalCache>(code033(), limits.cache_cap);
        continue;
      }
      if (out.examined == 1 || value > out.max_value) {
        out.max_value = value;
        out.max_witness = spec;
      }
      if (value == target) out.hits.push_back({spec, value});
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const SearchResult& result) {
  ordered_json doc;
  ordered_json hits = ordered_json::array();
  for (const auto& h : result.hits) {
    hits.push_back({{"graph", to_string(GraphSpec{h.spec})}, {"value", h.value}});
  }
  doc["hits"] = std::move(hits);
  doc["max_value"] = result.max_value;
  doc["max_witness"] = to_string(GraphSpec{result.max_witness});
  doc["examined"] = result.examined;
  ordered_json skipped = ordered_json::array();
  for (const auto& s : result.skipped) skipped.push_back(to_string(GraphSpec{s}));
  doc["skipped"] = std::move(skipped);
  doc["truncated"] = result.truncated;
  return doc;
}

}  // namespace octal::verify
