#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace octal {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  // Throws std::invalid_argument on self-loops, parallel edges or
  // out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  // Neighbors in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // Every edge once, as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool is_forest() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// True when `members` induces a connected subgraph (the empty set does not).
bool induces_connected(const Graph& g, std::span<const Vertex> members);

// All vertex sets of the given size inducing a connected subgraph, in
// lexicographic order. size == 0 yields nothing.
std::vector<VertexSet> enumerate_connected_removals(const Graph& g, std::size_t size);

// Induced subgraph on `keep` (sorted); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Induced subgraph on V \ removed with ids re-compacted in original order.
// Throws std::invalid_argument for ids >= vertex_count.
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed);

// Adds a fresh path of `length` vertices hanging off `anchor`.
Graph attach_path(const Graph& g, Vertex anchor, std::size_t length);

}  // namespace octal
