#include <doctest.h>

#include <algorithm>
#include <random>

#include "octal/canonical.hpp"
#include "octal/engine.hpp"
#include "octal/families.hpp"
#include "octal/mex.hpp"
#include "oracles.hpp"

using namespace octal;

namespace {
const OctalCode k033 = parse_code("0.33");
}

TEST_CASE("mex examples") {
  CHECK(mex(std::vector<GrundyValue>{}) == 0);
  CHECK(mex(std::vector<GrundyValue>{0, 1, 3}) == 2);
  CHECK(mex(std::vector<GrundyValue>{1, 2}) == 0);
  CHECK(mex(std::vector<GrundyValue>{2, 0, 0, 1, 1}) == 3);
}

TEST_CASE("mex is the least missing value") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<GrundyValue> value(0, 12);
  std::uniform_int_distribution<std::size_t> length(0, 15);
  for (int t = 0; t < 500; ++t) {
    std::vector<GrundyValue> xs(length(rng));
    for (auto& x : xs) x = value(rng);
    const GrundyValue m = mex(xs);
    CHECK(std::find(xs.begin(), xs.end(), m) == xs.end());
    for (GrundyValue k = 0; k < m; ++k) CHECK(std::find(xs.begin(), xs.end(), k) != xs.end());
  }
}

TEST_CASE("grundy examples") {
  CHECK(grundy(build_path(7), k033) == 1);
  CHECK(grundy(build_cycle(9), k033) == 0);
  CHECK(grundy(realize_star(StarSpec({1, 1, 3, 4})), k033) == 1);
  CHECK(grundy(Graph(0), k033) == 0);
}

TEST_CASE("outcome examples") {
  CHECK(outcome(build_path(3), k033) == Outcome::P);
  CHECK(outcome(Graph(0), parse_code("0.137")) == Outcome::P);
  CHECK(outcome(build_path(1), parse_code("0.6")) == Outcome::P);
  CHECK(outcome(build_path(4), k033) == Outcome::N);
}

TEST_CASE("winning_moves examples") {
  const auto p4 = winning_moves(build_path(4), k033);
  REQUIRE(p4.size() == 2);
  CHECK(p4[0].removed == VertexSet{0});
  CHECK(p4[1].removed == VertexSet{3});
  CHECK(winning_moves(build_path(3), k033).empty());
  const auto p1 = winning_moves(build_path(1), k033);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].clause == MoveClause::TakeComponent);
}

TEST_CASE("winning moves lead to P-positions and exist exactly at N-positions") {
  std::mt19937_64 rng(8);
  EvalCache cache(k033);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_tree(1 + t % 11, rng);
    const auto moves = winning_moves(g, k033, cache);
    CHECK(moves.empty() == (grundy(g, k033, cache) == 0));
    for (const auto& m : moves) CHECK(grundy(remove_vertices(g, m.removed), k033, cache) == 0);
  }
}

TEST_CASE("engine matches whole-position brute force") {
  std::mt19937_64 rng(99);
  const std::vector<std::string> codes{"0.33", "0.6", "0.07", "0.137", "0.4", "0.77", "0.3"};
  for (int t = 0; t < 150; ++t) {
    const auto code = parse_code(codes[t % codes.size()]);
    Graph g = oracle::random_tree(1 + t % 12, rng);
    if (t % 3 == 0) g = disjoint_union(g, oracle::random_tree(1 + t % 4, rng));
    if (t % 5 == 0) g = oracle::random_graph(7, 0.4, rng);
    CHECK(grundy(g, code) == oracle::brute_grundy(g, code));
  }
}

TEST_CASE("cache soundness") {
  std::mt19937_64 rng(123);
  EvalCache shared(k033);
  std::uniform_int_distribution<std::size_t> size(1, 14);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_tree(size(rng), rng);
    const GrundyValue fresh = grundy(g, k033);
    CHECK(grundy(g, k033, shared) == fresh);
    CHECK(fresh == oracle::brute_grundy(g, k033));
  }
  CHECK(shared.hits() > 0);
}

TEST_CASE("outcome agrees with grundy value") {
  std::mt19937_64 rng(4);
  EvalCache cache(k033);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_tree(1 + t % 13, rng);
    CHECK((outcome(g, k033, cache) == Outcome::P) == (grundy(g, k033, cache) == 0));
  }
}

TEST_CASE("sum rule") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  EvalCache cache(k033);
  for (int t = 0; t < 200; ++t) {
    Graph forest(0);
    GrundyValue expected = 0;
    while (true) {
      const std::size_t n = size(rng);
      if (forest.vertex_count() + n > 18) break;
      const Graph tree = oracle::random_tree(n, rng);
      expected ^= grundy(tree, k033);
      forest = disjoint_union(forest, tree);
      CHECK(grundy(disjoint_union(tree, tree), k033, cache) == 0);
    }
    CHECK(grundy(forest, k033, cache) == expected);
  }
}

TEST_CASE("cache refuses a different code") {
  EvalCache cache(parse_code("0.6"));
  CHECK_THROWS_AS(grundy(build_path(3), k033, cache), std::invalid_argument);
}

TEST_CASE("cache cap is an explicit error") {
  EvalCache cache(k033, 4);
  CHECK_THROWS_AS(grundy(build_path(20), k033, cache), ResourceLimitError);
  try {
    EvalCache tiny(k033, 2);
    (void)grundy(build_path(10), k033, tiny);
  } catch (const ResourceLimitError& e) {
    CHECK(e.cap() == 2);
  }
}

TEST_CASE("long paths do not exhaust the call stack") {
  CHECK(grundy(build_path(600), k033) == 0);
}

TEST_CASE("path options are mirror symmetric") {
  for (std::size_t n = 1; n <= 15; ++n) {
    const Graph p = build_path(n);
    std::vector<Vertex> reverse(n);
    for (Vertex v = 0; v < n; ++v) reverse[v] = static_cast<Vertex>(n - 1 - v);
    const Graph q = oracle::relabel(p, reverse);
    auto keys = [](const Graph& g) {
      std::vector<PositionKey> out;
      for (const auto& m : legal_moves(g, k033)) {
        out.push_back(canonical_key(remove_vertices(g, m.removed)));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(keys(p) == keys(q));
  }
}
