// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance --only N   criterion N only
//   acceptance --skip N   everything but criterion N (repeatable)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "octal/canonical.hpp"
#include "octal/closed_form.hpp"
#include "octal/engine.hpp"
#include "octal/families.hpp"
#include "octal/rules.hpp"
#include "octal/verification.hpp"
#include "oracles.hpp"

using namespace octal;

namespace {

const OctalCode k033 = parse_code("0.33");

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no time limit
  std::function<Verdict()> run;
};

// Records the first few mismatches.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Verdict outcome(const std::string& extra = "") const {
    std::ostringstream s;
    s << cases_ << " cases, " << failures_ << " failures";
    if (!extra.empty()) s << ", " << extra;
    if (!notes_.empty()) s << " [" << notes_ << "]";
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

std::string show(GrundyValue expected, GrundyValue actual) {
  return "expected " + std::to_string(expected) + " got " + std::to_string(actual);
}

// Arm-length 4-tuples over 0..5 (0 = no arm), all-zero excluded: 6^4 - 1.
std::vector<StarSpec> criterion3_stars() {
  std::vector<StarSpec> out;
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; b <= 5; ++b)
      for (unsigned c = 0; c <= 5; ++c)
        for (unsigned d = 0; d <= 5; ++d) {
          if (a + b + c + d == 0) continue;
          std::vector<unsigned> arms;
          for (unsigned x : {a, b, c, d}) {
            if (x) arms.push_back(x);
          }
          out.emplace_back(arms);
        }
  return out;
}

Verdict paths_cycles() {
  Tally t;
  EvalCache cache(k033);
  for (std::size_t n = 0; n <= 60; ++n) {
    const auto v = grundy(build_path(n), k033, cache);
    t.check(v == n % 3, "P_" + std::to_string(n) + " " + show(n % 3, v));
  }
  for (std::size_t n = 3; n <= 20; ++n) {
    const auto v = grundy(build_cycle(n), k033, cache);
    t.check(v == n % 3, "C_" + std::to_string(n) + " " + show(n % 3, v));
  }
  return t.outcome();
}

Verdict star_table() {
  Tally t;
  const std::vector<std::vector<GrundyValue>> figure = {
      {1}, {2, 0}, {0, 1, 2}, {1, 2, 0, 1}, {0, 3, 1, 2, 0}, {1, 2, 0, 3, 1, 2}};
  std::size_t entries = 0;
  for (std::size_t k = 0; k < figure.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const auto v = c033::star_table_value(k, j);
      t.check(v == figure[k][j], "(" + std::to_string(k) + "," + std::to_string(j) + ") " +
                                     show(figure[k][j], v));
      ++entries;
    }
  }
  for (std::size_t k = 6; k <= 12; ++k) {
    std::string row = k % 2 ? "1203" : "03120";
    while (row.size() < k + 1) row += k % 2 ? "12" : "30";
    for (std::size_t j = 0; j <= k; ++j) {
      const auto want = static_cast<GrundyValue>(row[j] - '0');
      const auto v = c033::star_table_value(k, j);
      t.check(v == want, "row " + std::to_string(k) + " col " + std::to_string(j));
    }
  }
  return t.outcome(std::to_string(entries) + " figure entries, rows 6-12 patterned");
}

Verdict star_oracle() {
  Tally t;
  EvalCache cache(k033);
  const auto stars = criterion3_stars();
  for (const auto& s : stars) {
    const auto e = grundy(realize_star(s), k033, cache);
    const auto f = c033::star_grundy(s);
    t.check(e == f, to_string(s) + " engine " + std::to_string(e) + " closed " + std::to_string(f));
  }
  return t.outcome(std::to_string(stars.size()) + " specs");
}

Verdict s11l_values() {
  Tally t;
  EvalCache cache(k033);
  for (unsigned l = 1; l <= 15; ++l) {
    const StarSpec s({1, 1, l});
    t.check(c033::star_grundy(s) == l % 3, "closed " + to_string(s));
    t.check(grundy(realize_star(s), k033, cache) == l % 3, "engine " + to_string(s));
  }
  return t.outcome();
}

Verdict bistar_oracle() {
  const auto r = verify::bistars({3, 4, 5});
  Tally t;
  for (const auto& f : r.failures) t.check(false, f.input + " " + f.expected + "/" + f.actual);
  const bool covered = r.extras["table1_cells_covered"] == 64 &&
                       r.extras["table2_cells_covered"] == 100 &&
                       r.extras["table1_cells_checked"] == 64 &&
                       r.extras["table2_cells_checked"] == 100;
  auto out = t.outcome();
  out.ok = r.passed() && covered;
  std::ostringstream s;
  s << r.cases << " cases (" << r.extras["sweep_cases"] << " sweep), " << r.failures.size()
    << " failures, table cells " << r.extras["table1_cells_checked"] << "/64 and "
    << r.extras["table2_cells_checked"] << "/100";
  out.detail = s.str() + (r.failures.empty() ? "" : " " + out.detail);
  return out;
}

Verdict invariance() {
  Tally t;
  EvalCache cache(k033);
  std::size_t attachments = 0;
  for (const auto& s : criterion3_stars()) {
    const Graph g = realize_star(s);
    const auto base = grundy(g, k033, cache);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (x != 0 && g.degree(x) != 1) continue;
      const auto v = grundy(attach_path(g, x, 3), k033, cache);
      t.check(v == base, to_string(s) + " + P_3 at " + std::to_string(x));
      ++attachments;
    }
  }
  std::vector<StarSpec> sides{StarSpec::absent(), StarSpec{}};
  for (const auto& s : criterion3_stars()) {
    if (s.arms().size() <= 3 && s.arms().back() <= 4) sides.push_back(s);
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, sides.size() - 1);
  std::uniform_int_distribution<unsigned> middle(0, 5);
  std::size_t sampled = 0;
  while (sampled < 200) {
    BistarSpec b{sides[pick(rng)], middle(rng), sides[pick(rng)]};
    // m = 0 with an absent side is a merged star, not a bistar.
    if (b.middle_edges == 0 && !(b.left.present() && b.right.present())) continue;
    ++sampled;
    const auto before = grundy(realize_bistar(b), k033, cache);
    const auto label = to_string(GraphSpec{b});
    b.middle_edges += 3;
    t.check(grundy(realize_bistar(b), k033, cache) == before, label + " m+3");
  }
  return t.outcome(std::to_string(attachments) + " attachments, " + std::to_string(sampled) +
                   " bistars");
}

Verdict counterexample() {
  const Graph base = realize_bistar(verify::counterexample_bistar());
  const Graph attached = attach_path(base, verify::counterexample_vertex(), 3);
  const auto before = outcome(base, k033);
  const auto after = outcome(attached, k033);
  const bool ok = before == octal::Outcome::N && after == octal::Outcome::P;
  return {ok, std::string("base (") + std::to_string(base.vertex_count()) + " vertices) " +
                  to_string(before) + ", with P_3 at u (" +
                  std::to_string(attached.vertex_count()) + " vertices) " + to_string(after)};
}

Verdict caterpillar() {
  EvalCache cache(k033);
  const Graph g = realize_caterpillar(verify::grundy_ten_caterpillar());
  const auto v = grundy(g, k033, cache);
  return {v == 10, std::to_string(g.vertex_count()) + " vertices, value " + std::to_string(v) +
                       ", " + std::to_string(cache.size()) + " cached positions (cap " +
                       std::to_string(cache.cap()) + ")"};
}

Verdict heap_graph() {
  Tally t;
  for (const char* c : {"0.3", "0.33", "0.6", "0.07", "0.137"}) {
    const auto code = parse_code(c);
    EvalCache cache(code);
    HeapGrundyTable heaps(code);
    for (std::size_t n = 0; n <= 20; ++n) {
      const auto h = heaps.value(n);
      const auto e = grundy(build_path(n), code, cache);
      t.check(h == e, std::string(c) + " n=" + std::to_string(n) + " heap " + std::to_string(h) +
                          " engine " + std::to_string(e));
    }
  }
  const auto seq = grundy_sequence(k033, 60);
  const auto p = detect_period(seq);
  t.check(p.has_value() && *p == Period{0, 3}, "0.33 period");
  t.check(seq.size() >= 3 && seq[0] == 0 && seq[1] == 1 && seq[2] == 2, "0.33 values");
  return t.outcome(p ? "0.33 period (" + std::to_string(p->preperiod) + "," +
                           std::to_string(p->period) + ")"
                     : "0.33 no period");
}

Verdict sum_rule() {
  Tally t;
  std::mt19937_64 rng(1618);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  EvalCache cache(k033);
  std::size_t trees = 0;
  for (int f = 0; f < 200; ++f) {
    Graph forest(0);
    GrundyValue xor_of_trees = 0;
    while (true) {
      const std::size_t n = size(rng);
      if (forest.vertex_count() + n > 18) break;
      const Graph tree = oracle::random_tree(n, rng);
      const auto v = grundy(tree, k033);
      xor_of_trees ^= v;
      forest = disjoint_union(forest, tree);
      t.check(grundy(disjoint_union(tree, tree), k033, cache) == 0, "T+T");
      ++trees;
    }
    t.check(grundy(forest, k033, cache) == xor_of_trees, "forest " + std::to_string(f));
  }
  return t.outcome("200 forests, " + std::to_string(trees) + " trees");
}

Verdict canonicalization() {
  Tally t;
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  for (int i = 0; i < 200; ++i) {
    const Graph tree = oracle::random_tree(size(rng), rng);
    const auto key = canonical_key(tree);
    for (int r = 0; r < 100; ++r) {
      const auto perm = oracle::random_permutation(tree.vertex_count(), rng);
      t.check(canonical_key(oracle::relabel(tree, perm)) == key, "tree " + std::to_string(i));
    }
  }
  const auto levels = oracle::all_trees(9);
  const std::vector<std::size_t> counts{1, 1, 1, 1, 2, 3, 6, 11, 23, 47};
  std::set<PositionKey> keys;
  std::size_t total = 0;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    t.check(levels[n].size() == counts[n], "tree count n=" + std::to_string(n));
    for (const auto& g : levels[n]) keys.insert(canonical_key(g));
    total += levels[n].size();
  }
  t.check(keys.size() == total, "distinct keys");
  return t.outcome(std::to_string(total) + " non-isomorphic trees, " +
                   std::to_string(keys.size()) + " keys");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  std::set<int> skip;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    const int id = std::stoi(argv[i + 1]);
    if (flag == "--only") only.insert(id);
    else if (flag == "--skip") skip.insert(id);
  }

  const std::vector<Criterion> criteria = {
      {1, "paths and cycles have value n mod 3", 30, paths_cycles},
      {2, "star table reproduces the reference grid and row patterns", 0, star_table},
      {3, "star closed form equals engine", 300, star_oracle},
      {4, "S_{1,1,l} has value l mod 3", 0, s11l_values},
      {5, "bistar closed form equals engine, all table cells exercised", 600, bistar_oracle},
      {6, "P_3 attachment and middle path +3 keep the value", 0, invariance},
      {7, "counterexample bistar: N, then P after P_3 at u", 0, counterexample},
      {8, "52-vertex caterpillar has value 10", 900, caterpillar},
      {9, "heap values equal path values; 0.33 period (0,3)", 0, heap_graph},
      {10, "sum rule on random forests", 0, sum_rule},
      {11, "canonical keys: relabeling invariant, injective on small trees", 0, canonicalization},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    if (skip.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + "s";
    if (c.limit_s > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.limit_s)) + "s)";
      if (secs > c.limit_s) {
        out.ok = false;
        out.detail += "; over time limit";
      }
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- "
              << out.detail << ", " << timing << std::endl;
    if (!out.ok) ++failed;
  }
  return failed ? 1 : 0;
}
