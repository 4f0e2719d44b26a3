#include "octal/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octal {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " out of range for " + std::to_string(vertex_count) +
                                  " vertices");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_forest() const {
  return edge_count_ + connected_components(*this).size() == vertex_count();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, std::span<const Vertex> members) {
  if (members.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : members) in[v] = 1;
  std::vector<Vertex> stack{members.front()};
  in[members.front()] = 2;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (in[w] == 1) {
        in[w] = 2;
        stack.push_back(w);
      }
    }
  }
  return reached == members.size();
}

namespace {

// ESU-style extension: every connected set is produced once, from its
// smallest vertex `root`.
void extend_connected(const Graph& g, std::size_t target, Vertex root, VertexSet& current,
                      std::vector<Vertex> extension, std::vector<char>& blocked,
                      std::vector<VertexSet>& out) {
  if (current.size() == target) {
    VertexSet s = current;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  while (!extension.empty()) {
    Vertex w = extension.back();
    extension.pop_back();
    std::vector<Vertex> next = extension;
    std::vector<Vertex> newly_blocked;
    for (Vertex x : g.neighbors(w)) {
      if (x > root && !blocked[x]) {
        blocked[x] = 1;
        newly_blocked.push_back(x);
        next.push_back(x);
      }
    }
    current.push_back(w);
    extend_connected(g, target, root, current, std::move(next), blocked, out);
    current.pop_back();
    for (Vertex x : newly_blocked) blocked[x] = 0;
  }
}

}  // namespace

std::vector<VertexSet> enumerate_connected_removals(const Graph& g, std::size_t size) {
  std::vector<VertexSet> out;
  const std::size_t n = g.vertex_count();
  if (size == 0 || size > n) return out;
  if (size == 1) {
    for (Vertex v = 0; v < n; ++v) out.push_back({v});
    return out;
  }
  if (size == 2) {
    for (auto [u, v] : g.edges()) out.push_back({u, v});
    return out;
  }
  std::vector<char> blocked(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    // `blocked` marks vertices already in the current set or its extension.
    blocked[root] = 1;
    std::vector<Vertex> extension;
    for (Vertex x : g.neighbors(root)) {
      if (x > root) {
        blocked[x] = 1;
        extension.push_back(x);
      }
    }
    VertexSet current{root};
    extend_connected(g, size, root, current, extension, blocked, out);
    for (Vertex x : g.neighbors(root)) blocked[x] = 0;
    blocked[root] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (relabel[w] != kAbsent && keep[i] < w) {
        edges.emplace_back(static_cast<Vertex>(i), relabel[w]);
      }
    }
  }
  return Graph::from_edges(keep.size(), edges);
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (Vertex v : removed) {
    if (v >= g.vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for " +
                                  std::to_string(g.vertex_count()) + " vertices");
    }
    drop[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph attach_path(const Graph& g, Vertex anchor, std::size_t length) {
  if (anchor >= g.vertex_count()) {
    throw std::invalid_argument("anchor " + std::to_string(anchor) + " out of range");
  }
  auto edges = g.edges();
  Vertex prev = anchor;
  auto next = static_cast<Vertex>(g.vertex_count());
  for (std::size_t i = 0; i < length; ++i, ++next) {
    edges.emplace_back(prev, next);
    prev = next;
  }
  return Graph::from_edges(g.vertex_count() + length, edges);
}

}  // namespace octal
