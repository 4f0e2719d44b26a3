#include "octal/engine.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace octal {

EvalCache::EvalCache(OctalCode code, std::size_t cap) : code_(std::move(code)), cap_(cap) {}

EvalCache::Shard& EvalCache::shard_for(const std::string& bytes) const {
  return shards_[std::hash<std::string>{}(bytes) % kShards];
}

std::optional<GrundyValue> EvalCache::find(const PositionKey& key) const {
  Shard& shard = shard_for(key.bytes());
  std::lock_guard lock(shard.mutex);
  auto it = shard.map.find(key.bytes());
  if (it == shard.map.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void EvalCache::insert(const PositionKey& key, GrundyValue value) {
  Shard& shard = shard_for(key.bytes());
  std::lock_guard lock(shard.mutex);
  if (shard.map.contains(key.bytes())) return;
  if (size_.load(std::memory_order_relaxed) >= cap_) throw ResourceLimitError(cap_);
  shard.map.emplace(key.bytes(), value);
  size_.fetch_add(1, std::memory_order_relaxed);
}

namespace {

// Remainder of a connected graph after removing a vertex set, split into
// components (each sorted ascending).
class RemainderSplitter {
 public:
  const std::vector<VertexSet>& split(const Graph& c, const VertexSet& removed) {
    const std::size_t n = c.vertex_count();
    mark_.assign(n, 0);
    for (Vertex v : removed) mark_[v] = 1;
    components_.clear();
    for (Vertex s = 0; s < n; ++s) {
      if (mark_[s]) continue;
      VertexSet comp{s};
      mark_[s] = 2;
      for (std::size_t head = 0; head < comp.size(); ++head) {
        for (Vertex w : c.neighbors(comp[head])) {
          if (!mark_[w]) {
            mark_[w] = 2;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      components_.push_back(std::move(comp));
    }
    return components_;
  }

 private:
  std::vector<char> mark_;
  std::vector<VertexSet> components_;
};

// Visits each legal move on the connected graph `c` together with the
// components it leaves behind.
template <class Visit>
void for_each_option(const Graph& c, const OctalCode& code, RemainderSplitter& splitter,
                     Visit&& visit) {
  const std::size_t n = c.vertex_count();
  for (std::size_t size = 1; size <= code.max_removal() && size <= n; ++size) {
    const unsigned digit = code.digit(size);
    if (digit == 0) continue;
    const auto flags = DigitFlags::decompose(digit);
    if (size == n) {
      if (flags.take_whole) {
        VertexSet all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        static const std::vector<VertexSet> kNothing;
        visit(all, MoveClause::TakeComponent, kNothing);
      }
      continue;
    }
    if (!flags.leave_connected && !flags.disconnect) continue;
    for (const auto& x : enumerate_connected_removals(c, size)) {
      const auto& rest = splitter.split(c, x);
      if (rest.size() == 1) {
        if (flags.leave_connected) visit(x, MoveClause::LeaveConnected, rest);
      } else if (flags.disconnect) {
        visit(x, MoveClause::Disconnect, rest);
      }
    }
  }
}

struct Frame {
  Graph graph;
  PositionKey key;
  bool expanded = false;
  // One entry per option: keys of the components left by that move.
  std::vector<std::vector<PositionKey>> options;
};

// Value of a connected position, evaluated with an explicit work stack.
void evaluate_connected(Graph root, PositionKey root_key, EvalCache& cache) {
  const OctalCode& code = cache.code();
  detail::KeyBuilder keys;
  RemainderSplitter splitter;
  std::vector<Frame> stack;
  stack.push_back(Frame{std::move(root), std::move(root_key), false, {}});
  std::unordered_set<std::string> scheduled;
  std::vector<GrundyValue> values;

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (!top.expanded) {
      if (cache.find(top.key)) {
        stack.pop_back();
        continue;
      }
      top.expanded = true;
      scheduled.clear();
      std::vector<Frame> children;
      for_each_option(top.graph, code, splitter,
                      [&](const VertexSet&, MoveClause, const std::vector<VertexSet>& rest) {
                        std::vector<PositionKey> option;
                        option.reserve(rest.size());
                        for (const auto& comp : rest) {
                          PositionKey k = keys.key_of(top.graph, comp);
                          if (!scheduled.contains(k.bytes()) && !cache.find(k)) {
                            scheduled.insert(k.bytes());
                            children.push_back(
                                Frame{induced_subgraph(top.graph, comp), k, false, {}});
                          }
                          option.push_back(std::move(k));
                        }
                        top.options.push_back(std::move(option));
                      });
      if (!children.empty()) {
        // `top` may dangle after the pushes below.
        for (auto& child : children) stack.push_back(std::move(child));
        continue;
      }
    }
    Frame& ready = stack.back();
    values.clear();
    for (const auto& option : ready.options) {
      GrundyValue x = 0;
      for (const auto& k : option) x ^= *cache.find(k);
      values.push_back(x);
    }
    cache.insert(ready.key, mex(values));
    stack.pop_back();
  }
}

void require_matching_code(const OctalCode& code, const EvalCache& cache) {
  if (!(cache.code() == code)) {
    throw std::invalid_argument("evaluation cache belongs to " + cache.code().str() +
                                ", not " + code.str());
  }
}

}  // namespace

GrundyValue grundy(const Graph& g, const OctalCode& code, EvalCache& cache) {
  require_matching_code(code, cache);
  GrundyValue total = 0;
  detail::KeyBuilder keys;
  for (const auto& comp : connected_components(g)) {
    PositionKey key = keys.key_of(g, comp);
    auto known = cache.find(key);
    if (!known) {
      evaluate_connected(induced_subgraph(g, comp), key, cache);
      known = cache.find(key);
    }
    total ^= *known;
  }
  return total;
}

GrundyValue grundy(const Graph& g, const OctalCode& code) {
  EvalCache cache(code);
  return grundy(g, code, cache);
}

Outcome outcome(const Graph& g, const OctalCode& code, EvalCache& cache) {
  return grundy(g, code, cache) == 0 ? Outcome::P : Outcome::N;
}

Outcome outcome(const Graph& g, const OctalCode& code) {
  EvalCache cache(code);
  return outcome(g, code, cache);
}

std::vector<Move> winning_moves(const Graph& g, const OctalCode& code, EvalCache& cache) {
  require_matching_code(code, cache);
  std::vector<Move> out;
  for (auto& move : legal_moves(g, code)) {
    if (grundy(remove_vertices(g, move.removed), code, cache) == 0) out.push_back(std::move(move));
  }
  return out;
}

std::vector<Move> winning_moves(const Graph& g, const OctalCode& code) {
  EvalCache cache(code);
  return winning_moves(g, code, cache);
}

}  // namespace octal
