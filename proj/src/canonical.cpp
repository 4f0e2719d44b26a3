#include "octal/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace octal {

namespace {

void put_varint(std::string& out, std::size_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

// Packs a string of '0'/'1' characters, most significant bit first.
void pack_bits(std::string& out, const std::string& bits) {
  unsigned char acc = 0;
  int filled = 0;
  for (char c : bits) {
    acc = static_cast<unsigned char>((acc << 1) | (c == '1' ? 1 : 0));
    if (++filled == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(acc << (8 - filled)));
}

}  // namespace

std::string PositionKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

PositionKey canonical_key(const Graph& g) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  detail::KeyBuilder builder;
  return builder.key_of(g, all);
}

namespace detail {

PositionKey KeyBuilder::key_of(const Graph& g, std::span<const Vertex> members) {
  const std::size_t n = members.size();
  if (local_.size() < g.vertex_count()) local_.resize(g.vertex_count(), -1);
  for (std::size_t i = 0; i < n; ++i) local_[members[i]] = static_cast<int>(i);

  degree_.assign(n, 0);
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(members[i])) {
      if (local_[w] >= 0) ++degree_[i];
    }
    degree_sum += static_cast<std::size_t>(degree_[i]);
  }
  const std::size_t edges = degree_sum / 2;

  // Components of the subset.
  seen_.assign(n, 0);
  std::vector<std::vector<Vertex>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen_[s]) continue;
    std::vector<Vertex> comp{members[s]};
    seen_[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        const int lw = local_[w];
        if (lw >= 0 && !seen_[lw]) {
          seen_[lw] = 1;
          comp.push_back(w);
        }
      }
    }
    components.push_back(std::move(comp));
  }

  std::string bytes;
  if (edges + components.size() == n) {
    trees_.resize(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
      trees_[c].clear();
      encode_tree(g, components[c], trees_[c]);
    }
    std::sort(trees_.begin(), trees_.begin() + static_cast<long>(components.size()));
    std::string bits;
    for (std::size_t c = 0; c < components.size(); ++c) bits += trees_[c];
    bytes.push_back('F');
    put_varint(bytes, n);
    pack_bits(bytes, bits);
  } else {
    bytes.push_back('G');
    put_varint(bytes, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex w : g.neighbors(members[i])) {
        const int lw = local_[w];
        if (lw > static_cast<int>(i)) {
          put_varint(bytes, i);
          put_varint(bytes, static_cast<std::size_t>(lw));
        }
      }
    }
  }

  for (Vertex v : members) local_[v] = -1;
  return PositionKey(std::move(bytes));
}

// Writes a flag character ('0' one center, '1' two centers) followed by the
// AHU string of the center-rooted tree, with '1' = open and '0' = close.
void KeyBuilder::encode_tree(const Graph& g, std::span<const Vertex> tree, std::string& out) {
  const std::size_t t = tree.size();
  if (t == 1) {
    out = "010";
    return;
  }

  // Peel leaves down to the center(s).
  std::vector<int> remaining_degree(t);
  std::vector<int> index_in_tree(t);
  std::vector<Vertex> layer;
  for (std::size_t i = 0; i < t; ++i) {
    const int li = local_[tree[i]];
    remaining_degree[i] = degree_[li];
    index_in_tree[i] = li;
    if (remaining_degree[i] <= 1) layer.push_back(static_cast<Vertex>(i));
  }
  // Map local id -> position within `tree`.
  position_.assign(degree_.size(), -1);
  for (std::size_t i = 0; i < t; ++i) position_[index_in_tree[i]] = static_cast<int>(i);
  auto pos_of = [&](Vertex graph_vertex) { return position_[local_[graph_vertex]]; };

  std::size_t left = t;
  std::vector<Vertex> next;
  while (left > 2) {
    next.clear();
    for (Vertex i : layer) {
      --left;
      remaining_degree[i] = -1;
      for (Vertex w : g.neighbors(tree[i])) {
        if (local_[w] < 0) continue;
        const int p = pos_of(w);
        if (remaining_degree[p] > 0 && --remaining_degree[p] == 1) {
          next.push_back(static_cast<Vertex>(p));
        }
      }
    }
    layer.swap(next);
  }
  std::vector<Vertex> centers;
  for (std::size_t i = 0; i < t; ++i) {
    if (remaining_degree[i] >= 0) centers.push_back(static_cast<Vertex>(i));
  }

  // BFS from the center(s); the central edge is not traversed.
  std::vector<int> parent(t, -2);
  order_.clear();
  for (Vertex c : centers) {
    parent[c] = -1;
    order_.push_back(c);
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex v = order_[head];
    for (Vertex w : g.neighbors(tree[v])) {
      if (local_[w] < 0) continue;
      const int p = pos_of(w);
      if (parent[p] == -2) {
        parent[p] = static_cast<int>(v);
        order_.push_back(static_cast<Vertex>(p));
      }
    }
  }

  if (code_.size() < t) code_.resize(t);
  std::vector<std::vector<Vertex>> kids(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (parent[i] >= 0) kids[static_cast<std::size_t>(parent[i])].push_back(static_cast<Vertex>(i));
  }
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const Vertex v = *it;
    children_.clear();
    for (Vertex k : kids[v]) children_.push_back(&code_[k]);
    std::sort(children_.begin(), children_.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& code = code_[v];
    code.clear();
    code.push_back('1');
    for (const std::string* c : children_) code += *c;
    code.push_back('0');
  }

  if (centers.size() == 1) {
    out.push_back('0');
    out += code_[centers[0]];
  } else {
    const std::string& a = code_[centers[0]];
    const std::string& b = code_[centers[1]];
    out.push_back('1');
    out.push_back('1');
    if (a <= b) {
      out += a;
      out += b;
    } else {
      out += b;
      out += a;
    }
    out.push_back('0');
  }
}

}  // namespace detail

}  // namespace octal
