#include "octal/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace octal {

StarSpec::StarSpec(std::vector<unsigned> arms) : arms_(std::move(arms)) {
  for (unsigned a : arms_) {
    if (a == 0) throw std::invalid_argument("star arm lengths must be positive");
  }
  std::sort(arms_.begin(), arms_.end());
}

StarSpec StarSpec::absent() {
  StarSpec s;
  s.present_ = false;
  return s;
}

std::size_t StarSpec::vertex_count() const {
  if (!present_) return 0;
  return 1 + std::accumulate(arms_.begin(), arms_.end(), std::size_t{0});
}

StarSpec StarSpec::with_arm(unsigned length) const {
  if (length == 0) return *this;
  auto arms = arms_;
  arms.push_back(length);
  return StarSpec(std::move(arms));
}

Graph build_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return Graph::from_edges(n, edges);
}

Graph build_cycle(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Appends the star's edges with its center at `center`; new vertices are
// numbered from `next`.
void append_star(const StarSpec& spec, Vertex center, Vertex& next, std::vector<Edge>& edges) {
  for (unsigned len : spec.arms()) {
    Vertex prev = center;
    for (unsigned i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
}

}  // namespace

Graph realize_star(const StarSpec& spec) {
  if (!spec.present()) return Graph{};
  std::vector<Edge> edges;
  Vertex next = 1;
  append_star(spec, 0, next, edges);
  return Graph::from_edges(next, edges);
}

Graph realize_bistar(const BistarSpec& spec) {
  const auto& [left, m, right] = spec;
  if (m == 0) {
    if (!left.present()) return realize_star(right);
    if (!right.present()) return realize_star(left);
    auto arms = left.arms();
    arms.insert(arms.end(), right.arms().begin(), right.arms().end());
    return realize_star(StarSpec(std::move(arms)));
  }
  if (!left.present() && !right.present()) return build_path(m - 1);
  if (!right.present()) return realize_star(left.with_arm(m - 1));
  if (!left.present()) return realize_star(right.with_arm(m - 1));

  std::vector<Edge> edges;
  Vertex next = 1;
  append_star(left, 0, next, edges);
  const Vertex right_center = next++;
  append_star(right, right_center, next, edges);
  Vertex prev = 0;
  for (unsigned i = 1; i < m; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, right_center);
  return Graph::from_edges(next, edges);
}

Graph realize_caterpillar(const CaterpillarSpec& spec) {
  if (spec.spine_length == 0) throw std::invalid_argument("caterpillar spine must be nonempty");
  std::vector<Edge> edges;
  for (unsigned i = 1; i < spec.spine_length; ++i) edges.emplace_back(i - 1, i);
  std::vector<char> used(spec.spine_length, 0);
  Vertex next = spec.spine_length;
  for (unsigned p : spec.leg_positions) {
    if (p >= spec.spine_length) {
      throw std::invalid_argument("leg position " + std::to_string(p) + " outside spine of " +
                                  std::to_string(spec.spine_length));
    }
    if (used[p]) throw std::invalid_argument("repeated leg position " + std::to_string(p));
    used[p] = 1;
    edges.emplace_back(p, next++);
  }
  return Graph::from_edges(next, edges);
}

// ---- DSL ---------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

unsigned long parse_number(const std::string& token, const std::string& what) {
  unsigned long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw SpecParseError("invalid " + what + " '" + token + "'", token);
  }
  return value;
}

std::vector<unsigned> parse_list(const std::string& text, const std::string& what) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ',')) {
    out.push_back(static_cast<unsigned>(parse_number(tok, what)));
  }
  return out;
}

StarSpec parse_star(const std::string& text) {
  if (text == "empty") return StarSpec::absent();
  auto arms = parse_list(text, "arm length");
  for (unsigned a : arms) {
    if (a == 0) throw SpecParseError("arm length must be positive", "0");
  }
  return StarSpec(std::move(arms));
}

std::string join(const std::vector<unsigned>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string side_string(const StarSpec& s) { return s.present() ? join(s.arms()) : "empty"; }

}  // namespace

GraphSpec parse_graph_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw SpecParseError("graph spec '" + text + "' lacks a kind prefix", text);
  }
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "path") return PathSpec{parse_number(body, "path length")};
  if (kind == "cycle") {
    const auto n = parse_number(body, "cycle length");
    if (n < 3) throw SpecParseError("cycle needs at least 3 vertices", body);
    return CycleSpec{n};
  }
  if (kind == "star") return parse_star(body);
  if (kind == "bistar") {
    auto parts = split(body, '/');
    if (parts.size() != 3) throw SpecParseError("bistar needs <left>/<m>/<right>", body);
    return BistarSpec{parse_star(parts[0]),
                      static_cast<unsigned>(parse_number(parts[1], "middle path length")),
                      parse_star(parts[2])};
  }
  if (kind == "cat") {
    const auto sep = body.find(':');
    const std::string spine = body.substr(0, sep);
    const std::string legs = sep == std::string::npos ? "" : body.substr(sep + 1);
    CaterpillarSpec spec{static_cast<unsigned>(parse_number(spine, "spine length")),
                         parse_list(legs, "leg position")};
    if (spec.spine_length == 0) throw SpecParseError("spine must be nonempty", spine);
    std::vector<char> used(spec.spine_length, 0);
    for (unsigned p : spec.leg_positions) {
      if (p >= spec.spine_length || used[p]) {
        throw SpecParseError("invalid leg position " + std::to_string(p), std::to_string(p));
      }
      used[p] = 1;
    }
    return spec;
  }
  if (kind == "edges") {
    const auto sep = body.find(';');
    const std::string count = body.substr(0, sep);
    const std::string list = sep == std::string::npos ? "" : body.substr(sep + 1);
    EdgeListSpec spec{parse_number(count, "vertex count"), {}};
    if (!list.empty()) {
      for (const auto& tok : split(list, ',')) {
        const auto dash = tok.find('-');
        if (dash == std::string::npos) throw SpecParseError("edge '" + tok + "' lacks '-'", tok);
        const auto u = parse_number(tok.substr(0, dash), "edge endpoint");
        const auto v = parse_number(tok.substr(dash + 1), "edge endpoint");
        if (u >= spec.n || v >= spec.n || u == v) {
          throw SpecParseError("invalid edge '" + tok + "'", tok);
        }
        spec.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
    try {
      (void)Graph::from_edges(spec.n, spec.edges);
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(e.what(), list);
    }
    return spec;
  }
  throw SpecParseError("unknown graph kind '" + kind + "'", kind);
}

Graph realize(const GraphSpec& spec) {
  struct Visitor {
    Graph operator()(const PathSpec& s) const { return build_path(s.n); }
    Graph operator()(const CycleSpec& s) const { return build_cycle(s.n); }
    Graph operator()(const StarSpec& s) const { return realize_star(s); }
    Graph operator()(const BistarSpec& s) const { return realize_bistar(s); }
    Graph operator()(const CaterpillarSpec& s) const { return realize_caterpillar(s); }
    Graph operator()(const EdgeListSpec& s) const { return Graph::from_edges(s.n, s.edges); }
  };
  return std::visit(Visitor{}, spec);
}

std::string to_string(const StarSpec& spec) { return "star:" + side_string(spec); }

std::string to_string(const GraphSpec& spec) {
  struct Visitor {
    std::string operator()(const PathSpec& s) const { return "path:" + std::to_string(s.n); }
    std::string operator()(const CycleSpec& s) const { return "cycle:" + std::to_string(s.n); }
    std::string operator()(const StarSpec& s) const { return to_string(s); }
    std::string operator()(const BistarSpec& s) const {
      return "bistar:" + side_string(s.left) + "/" + std::to_string(s.middle_edges) + "/" +
             side_string(s.right);
    }
    std::string operator()(const CaterpillarSpec& s) const {
      return "cat:" + std::to_string(s.spine_length) + ":" + join(s.leg_positions);
    }
    std::string operator()(const EdgeListSpec& s) const {
      std::string out = "edges:" + std::to_string(s.n) + ";";
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.edges[i].first) + "-" + std::to_string(s.edges[i].second);
      }
      return out;
    }
  };
  return std::visit(Visitor{}, spec);
}

// ---- Position descriptions -----------------------------------------------------

namespace {

// Walks from `from` through `start` along degree-2 vertices; returns the
// number of vertices visited and the vertex where the walk stopped.
std::pair<unsigned, Vertex> walk_branch(const Graph& g, Vertex from, Vertex start) {
  unsigned count = 1;
  Vertex prev = from;
  Vertex cur = start;
  while (g.degree(cur) == 2) {
    const auto& nb = g.neighbors(cur);
    const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
    ++count;
  }
  return {count, cur};
}

std::string star_name(const std::vector<unsigned>& arms) {
  std::string out = "S_{";
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(arms[i]);
  }
  return out + "}";
}

std::string describe_component(const Graph& c) {
  const std::size_t n = c.vertex_count();
  if (c.edge_count() + 1 != n) {
    bool all_two = true;
    for (Vertex v = 0; v < n; ++v) all_two = all_two && c.degree(v) == 2;
    if (all_two && c.edge_count() == n) return "C_" + std::to_string(n);
    return "graph(n=" + std::to_string(n) + ",m=" + std::to_string(c.edge_count()) + ")";
  }
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    if (c.degree(v) >= 3) branch.push_back(v);
  }
  if (branch.empty()) return "P_" + std::to_string(n);
  if (branch.size() == 1) {
    std::vector<unsigned> arms;
    for (Vertex w : c.neighbors(branch[0])) arms.push_back(walk_branch(c, branch[0], w).first);
    std::sort(arms.begin(), arms.end());
    return star_name(arms);
  }
  if (branch.size() == 2) {
    std::vector<unsigned> left;
    std::vector<unsigned> right;
    unsigned middle = 0;
    for (Vertex w : c.neighbors(branch[0])) {
      auto [len, end] = walk_branch(c, branch[0], w);
      if (end == branch[1]) {
        middle = len;
      } else {
        left.push_back(len);
      }
    }
    for (Vertex w : c.neighbors(branch[1])) {
      auto [len, end] = walk_branch(c, branch[1], w);
      if (end != branch[0]) right.push_back(len);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (right < left) std::swap(left, right);
    return star_name(left) + "-" + std::to_string(middle) + "-" + star_name(right);
  }
  return "tree(n=" + std::to_string(n) + ")";
}

}  // namespace

std::string describe_position(const Graph& g) {
  if (g.empty()) return "empty";
  std::vector<std::string> parts;
  for (const auto& comp : connected_components(g)) {
    parts.push_back(describe_component(induced_subgraph(g, comp)));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

}  // namespace octal
