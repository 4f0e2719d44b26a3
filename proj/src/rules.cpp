#include "octal/rules.hpp"

#include <algorithm>

#include "octal/mex.hpp"

namespace octal {

DigitFlags DigitFlags::decompose(unsigned digit) {
  return DigitFlags{(digit & 1u) != 0, (digit & 2u) != 0, (digit & 4u) != 0};
}

unsigned DigitFlags::recompose() const {
  return (take_whole ? 1u : 0u) + (leave_connected ? 2u : 0u) + (disconnect ? 4u : 0u);
}

OctalCode OctalCode::parse(const std::string& text) {
  if (text.size() < 2 || text[0] != '0' || text[1] != '.') {
    const std::string bad = text.empty() ? std::string("<empty>") : text.substr(0, 2);
    throw CodeParseError("octal code must start with '0.', got '" + bad + "'", bad);
  }
  OctalCode code;
  for (std::size_t i = 2; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '7') {
      throw CodeParseError(std::string("invalid octal digit '") + c + "' at position " +
                               std::to_string(i),
                           std::string(1, c));
    }
    code.digits_.push_back(static_cast<unsigned>(c - '0'));
  }
  if (code.digits_.empty()) throw CodeParseError("octal code has no digits", text);
  if (code.digits_.back() == 0) {
    throw CodeParseError("octal code must end with a nonzero digit, trailing '0'", "0");
  }
  return code;
}

unsigned OctalCode::digit(std::size_t count) const {
  if (count == 0 || count > digits_.size()) return 0;
  return digits_[count - 1];
}

std::string OctalCode::str() const {
  std::string out = "0.";
  for (unsigned d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

const char* to_string(MoveClause c) {
  switch (c) {
    case MoveClause::TakeComponent: return "take-component";
    case MoveClause::LeaveConnected: return "leave-connected";
    case MoveClause::Disconnect: return "disconnect";
  }
  return "?";
}

std::optional<MoveClause> classify_removal(const Graph& g, const VertexSet& removed) {
  if (removed.empty()) return std::nullopt;
  for (Vertex v : removed) {
    if (v >= g.vertex_count()) return std::nullopt;
  }
  if (!induces_connected(g, removed)) return std::nullopt;

  // Component H containing the removed set, and the connectivity of H \ X.
  std::vector<char> state(g.vertex_count(), 0);  // 1 removed, 2 reached
  for (Vertex v : removed) state[v] = 1;
  std::vector<Vertex> stack{removed.front()};
  std::vector<Vertex> component;
  std::vector<char> in_h(g.vertex_count(), 0);
  in_h[removed.front()] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    component.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!in_h[w]) {
        in_h[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (component.size() == removed.size()) return MoveClause::TakeComponent;

  std::vector<Vertex> rest;
  for (Vertex v : component) {
    if (state[v] != 1) rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end());
  return induces_connected(g, rest) ? MoveClause::LeaveConnected : MoveClause::Disconnect;
}

std::vector<Move> legal_moves(const Graph& g, const OctalCode& code) {
  std::vector<Move> out;
  for (std::size_t size = 1; size <= code.max_removal(); ++size) {
    const unsigned digit = code.digit(size);
    if (digit == 0) continue;
    const auto flags = DigitFlags::decompose(digit);
    for (auto& x : enumerate_connected_removals(g, size)) {
      const auto clause = classify_removal(g, x);
      if (!clause) continue;
      const bool allowed = (*clause == MoveClause::TakeComponent && flags.take_whole) ||
                           (*clause == MoveClause::LeaveConnected && flags.leave_connected) ||
                           (*clause == MoveClause::Disconnect && flags.disconnect);
      if (allowed) out.push_back(Move{std::move(x), *clause});
    }
  }
  return out;
}

HeapGrundyTable::HeapGrundyTable(OctalCode code) : code_(std::move(code)) {}

GrundyValue HeapGrundyTable::value(std::size_t heap) {
  std::vector<GrundyValue> options;
  while (values_.size() <= heap) {
    const std::size_t h = values_.size();
    options.clear();
    for (std::size_t take = 1; take <= code_.max_removal() && take <= h; ++take) {
      const unsigned digit = code_.digit(take);
      if (digit == 0) continue;
      const auto flags = DigitFlags::decompose(digit);
      const std::size_t rest = h - take;
      if (rest == 0 && flags.take_whole) options.push_back(0);
      if (rest >= 1 && flags.leave_connected) options.push_back(values_[rest]);
      if (rest >= 2 && flags.disconnect) {
        for (std::size_t a = 1; a <= rest / 2; ++a) {
          options.push_back(values_[a] ^ values_[rest - a]);
        }
      }
    }
    values_.push_back(mex(options));
  }
  return values_[heap];
}

GrundyValue heap_grundy(const OctalCode& code, std::size_t heap, HeapGrundyTable& cache) {
  if (!(cache.code() == code)) {
    throw std::invalid_argument("heap table built for " + cache.code().str() + ", asked for " +
                                code.str());
  }
  return cache.value(heap);
}

GrundyValue heap_grundy(const OctalCode& code, std::size_t heap) {
  HeapGrundyTable table(code);
  return table.value(heap);
}

std::vector<GrundyValue> grundy_sequence(const OctalCode& code, std::size_t n_max) {
  HeapGrundyTable table(code);
  std::vector<GrundyValue> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(table.value(n));
  return out;
}

std::optional<Period> detect_period(const std::vector<GrundyValue>& seq) {
  const std::size_t len = seq.size();
  for (std::size_t p = 1; 2 * p <= len; ++p) {
    std::size_t start = 0;
    for (std::size_t i = len - p; i-- > 0;) {
      if (seq[i] != seq[i + p]) {
        start = i + 1;
        break;
      }
    }
    if (len - start >= 2 * p) return Period{start, p};
  }
  return std::nullopt;
}

}  // namespace octal
