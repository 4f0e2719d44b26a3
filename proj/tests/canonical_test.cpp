#include <doctest.h>

#include <random>
#include <set>

#include "octal/canonical.hpp"
#include "octal/families.hpp"
#include "oracles.hpp"

using namespace octal;

TEST_CASE("canonical_key examples") {
  const std::vector<Edge> relabeled{{2, 0}, {0, 1}};
  CHECK(canonical_key(build_path(3)) == canonical_key(Graph::from_edges(3, relabeled)));
  CHECK(canonical_key(build_path(3)) != canonical_key(realize_star(StarSpec({1, 1, 1}))));
  CHECK(canonical_key(realize_star(StarSpec({1, 2}))) == canonical_key(build_path(4)));
  CHECK(canonical_key(build_path(4)).is_forest_encoding());
  CHECK_FALSE(canonical_key(build_cycle(4)).is_forest_encoding());
}

TEST_CASE("empty graph and lone vertex differ") {
  CHECK(canonical_key(Graph(0)) != canonical_key(Graph(1)));
  CHECK(canonical_key(Graph(2)) != canonical_key(build_path(2)));
}

TEST_CASE("non-isomorphic tree counts") {
  const auto trees = oracle::all_trees(9);
  const std::vector<std::size_t> expected{1, 1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 0; n <= 9; ++n) CHECK(trees[n].size() == expected[n]);
}

TEST_CASE("keys separate all trees with at most 9 vertices") {
  std::set<PositionKey> keys;
  std::size_t count = 0;
  for (const auto& level : oracle::all_trees(9)) {
    for (const auto& t : level) {
      keys.insert(canonical_key(t));
      ++count;
    }
  }
  CHECK(keys.size() == count);
}

TEST_CASE("keys are invariant under relabeling") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  for (int t = 0; t < 200; ++t) {
    const Graph tree = oracle::random_tree(size(rng), rng);
    const PositionKey key = canonical_key(tree);
    for (int r = 0; r < 100; ++r) {
      const auto perm = oracle::random_permutation(tree.vertex_count(), rng);
      REQUIRE(canonical_key(oracle::relabel(tree, perm)) == key);
    }
  }
}

TEST_CASE("forest keys ignore component order") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Graph a = oracle::random_tree(1 + t % 7, rng);
    const Graph b = oracle::random_tree(1 + t % 5, rng);
    const Graph ab = disjoint_union(a, b);
    CHECK(canonical_key(ab) == canonical_key(disjoint_union(b, a)));
    const auto perm = oracle::random_permutation(ab.vertex_count(), rng);
    CHECK(canonical_key(oracle::relabel(ab, perm)) == canonical_key(ab));
  }
}

TEST_CASE("forest keys agree with the isomorphism oracle") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::vector<Graph> forests;
  for (int i = 0; i < 120; ++i) {
    Graph f = oracle::random_tree(size(rng), rng);
    f = disjoint_union(f, oracle::random_tree(size(rng), rng));
    forests.push_back(f);
  }
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (std::size_t j = i + 1; j < forests.size(); ++j) {
      CHECK((canonical_key(forests[i]) == canonical_key(forests[j])) ==
            oracle::isomorphic(forests[i], forests[j]));
    }
  }
}

TEST_CASE("graphs with cycles never collide with other graphs") {
  std::mt19937_64 rng(9);
  std::vector<Graph> graphs;
  for (int i = 0; i < 80; ++i) graphs.push_back(oracle::random_graph(6, 0.5, rng));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      if (canonical_key(graphs[i]) == canonical_key(graphs[j])) {
        CHECK(oracle::isomorphic(graphs[i], graphs[j]));
      }
    }
  }
}

TEST_CASE("subset keys match keys of the induced subgraph") {
  std::mt19937_64 rng(31);
  detail::KeyBuilder builder;
  for (int t = 0; t < 100; ++t) {
    const Graph g = t % 3 ? oracle::random_tree(12, rng) : oracle::random_graph(9, 0.3, rng);
    for (const auto& comp : connected_components(remove_vertices(g, VertexSet{0}))) {
      const Graph rest = remove_vertices(g, VertexSet{0});
      CHECK(builder.key_of(rest, comp) == canonical_key(induced_subgraph(rest, comp)));
    }
  }
}
