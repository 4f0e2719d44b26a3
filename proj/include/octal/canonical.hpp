#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "octal/graph.hpp"

namespace octal {

// Canonical encoding of a position, used as a memoization key.
//
// Forests are encoded up to isomorphism: each tree is rooted at its center
// (or at a virtual vertex splitting the central edge when it has two
// centers), written as an AHU parenthesis string, and the tree strings are
// sorted and bit-packed behind the vertex count. Graphs with a cycle get an
// exact labeled encoding (vertex count plus sorted edge list); it never
// merges non-isomorphic graphs but may keep isomorphic copies apart.
class PositionKey {
 public:
  PositionKey() = default;
  explicit PositionKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  bool is_forest_encoding() const { return !bytes_.empty() && bytes_.front() == 'F'; }
  std::string hex() const;

  friend auto operator<=>(const PositionKey&, const PositionKey&) = default;
  friend bool operator==(const PositionKey&, const PositionKey&) = default;

 private:
  std::string bytes_;
};

PositionKey canonical_key(const Graph& g);

namespace detail {

// Reusable scratch for computing keys of vertex subsets of one graph without
// materializing the induced subgraph. Not thread-safe; one per thread.
class KeyBuilder {
 public:
  // Key of the subgraph of `g` induced by `members` (sorted ascending).
  PositionKey key_of(const Graph& g, std::span<const Vertex> members);

 private:
  void encode_tree(const Graph& g, std::span<const Vertex> tree, std::string& out);

  std::vector<int> local_;      // graph vertex -> index in current subset, or -1
  std::vector<int> degree_;
  std::vector<int> position_;  // local id -> index within the tree being encoded
  std::vector<Vertex> order_;
  std::vector<std::string> code_;
  std::vector<std::string> trees_;
  std::vector<const std::string*> children_;
  std::vector<char> seen_;
};

}  // namespace detail

}  // namespace octal

template <>
struct std::hash<octal::PositionKey> {
  std::size_t operator()(const octal::PositionKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
