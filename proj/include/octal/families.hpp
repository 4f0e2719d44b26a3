#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "octal/graph.hpp"

namespace octal {

// Subdivided star S_{l1,...,lk}: a center with one path of l_i vertices per
// arm. `present == false` is the empty graph; a present star with no arms is
// the lone center P_1.
class StarSpec {
 public:
  // Present star with the given arm lengths (each >= 1); stored sorted.
  explicit StarSpec(std::vector<unsigned> arms = {});
  static StarSpec absent();

  bool present() const { return present_; }
  const std::vector<unsigned>& arms() const { return arms_; }
  std::size_t vertex_count() const;

  // Same star with one more arm; length 0 leaves it unchanged.
  StarSpec with_arm(unsigned length) const;

  friend bool operator==(const StarSpec&, const StarSpec&) = default;

 private:
  bool present_ = true;
  std::vector<unsigned> arms_;
};

// Two stars whose centers are joined by a path of `middle_edges` edges.
//   m == 0: the centers merge (arm union); absent sides contribute nothing.
//   one side absent, m >= 1: the other star gains an arm of m-1 vertices.
//   both absent: the path P_{m-1} (empty when m <= 1).
struct BistarSpec {
  StarSpec left;
  unsigned middle_edges = 0;
  StarSpec right;

  friend bool operator==(const BistarSpec&, const BistarSpec&) = default;
};

// Spine path of `spine_length` vertices; each listed spine index (0-based)
// carries one pendant leaf.
struct CaterpillarSpec {
  unsigned spine_length = 1;
  std::vector<unsigned> leg_positions;

  friend bool operator==(const CaterpillarSpec&, const CaterpillarSpec&) = default;
};

Graph build_path(std::size_t n);
// Throws std::invalid_argument for n < 3.
Graph build_cycle(std::size_t n);

// Center is vertex 0; arms follow in sorted order, each listed outward.
Graph realize_star(const StarSpec& spec);
Graph realize_bistar(const BistarSpec& spec);
// Throws std::invalid_argument for an out-of-range or repeated leg index.
Graph realize_caterpillar(const CaterpillarSpec& spec);

// ---- Graph description language -------------------------------------------
//
//   path:<n>    cycle:<n>    star:<l1,l2,...>   star:   star:empty
//   bistar:<l...>/<m>/<l...>   (a side may be `empty`; an empty list is P_1)
//   cat:<spine>:<p1,p2,...>
//   edges:<n>;<u-v,u-v,...>

struct PathSpec {
  std::size_t n = 0;
};
struct CycleSpec {
  std::size_t n = 3;
};
struct EdgeListSpec {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

using GraphSpec =
    std::variant<PathSpec, CycleSpec, StarSpec, BistarSpec, CaterpillarSpec, EdgeListSpec>;

// Parse failure; `token()` names the offending piece of input.
class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

GraphSpec parse_graph_spec(const std::string& text);
Graph realize(const GraphSpec& spec);
std::string to_string(const GraphSpec& spec);
std::string to_string(const StarSpec& spec);

// Human-readable name of a position: P_n, C_n, S_{...}, S_{...}-m-S_{...},
// otherwise a generic tree/graph tag; components joined by " + ".
std::string describe_position(const Graph& g);

}  // namespace octal
