#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "octal/canonical.hpp"
#include "octal/graph.hpp"
#include "octal/mex.hpp"
#include "octal/rules.hpp"

namespace octal {

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::size_t cap)
      : std::runtime_error("position cache cap of " + std::to_string(cap) + " entries exceeded"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Insert-only map from canonical connected positions to Grundy values for a
// single octal code. Safe for concurrent readers and writers; a value, once
// written, never changes (every writer computes the same value).
class EvalCache {
 public:
  static constexpr std::size_t kDefaultCap = 50'000'000;

  explicit EvalCache(OctalCode code, std::size_t cap = kDefaultCap);
  EvalCache(const EvalCache&) = delete;
  EvalCache& operator=(const EvalCache&) = delete;

  const OctalCode& code() const { return code_; }
  std::size_t cap() const { return cap_; }

  std::optional<GrundyValue> find(const PositionKey& key) const;
  // Throws ResourceLimitError when a new entry would exceed the cap.
  void insert(const PositionKey& key, GrundyValue value);

  std::size_t size() const { return size_.load(std::memory_order_relaxed); }
  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, GrundyValue> map;
  };
  Shard& shard_for(const std::string& bytes) const;

  OctalCode code_;
  std::size_t cap_;
  mutable std::array<Shard, kShards> shards_;
  std::atomic<std::size_t> size_{0};
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

enum class Outcome { N, P };

inline const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

// Sprague-Grundy value of `g` under `code`: components are evaluated
// separately (memoized by canonical key) and combined by XOR.
// Throws std::invalid_argument if `cache` belongs to another code.
GrundyValue grundy(const Graph& g, const OctalCode& code, EvalCache& cache);
GrundyValue grundy(const Graph& g, const OctalCode& code);

Outcome outcome(const Graph& g, const OctalCode& code, EvalCache& cache);
Outcome outcome(const Graph& g, const OctalCode& code);

// Legal moves whose resulting position has Grundy value 0.
std::vector<Move> winning_moves(const Graph& g, const OctalCode& code, EvalCache& cache);
std::vector<Move> winning_moves(const Graph& g, const OctalCode& code);

}  // namespace octal
