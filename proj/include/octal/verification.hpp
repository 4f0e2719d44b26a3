#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "octal/engine.hpp"
#include "octal/families.hpp"
#include "octal/rules.hpp"

// Suites that check closed forms and reference values against the exact
// engine (or the heap recursion). Closed forms are never checked against
// themselves.
namespace octal::verify {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;
  std::size_t cache_entries = 0;
  // Suite-specific fields (coverage counters, values found, ...).
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();

  bool passed() const { return failures.empty(); }
  // With `timing == false`, elapsed_ms is written as null so the document
  // is byte-identical across runs.
  nlohmann::ordered_json to_json(bool timing = true) const;
};

Report paths_cycles(std::size_t n_max);

// Throws std::invalid_argument for max_arms < 3.
Report star_table(std::size_t max_arms);

struct BistarBounds {
  std::size_t max_arms = 3;    // per side
  unsigned max_arm_length = 4;
  unsigned max_middle = 5;
};

// Exhaustive sweep within `bounds` (each side may also be absent), plus one
// representative pair for every cell of both product tables.
Report bistars(const BistarBounds& bounds = {});

Report counterexample();

Report caterpillar(std::size_t cache_cap = EvalCache::kDefaultCap);

Report heap_path(const std::vector<OctalCode>& codes, std::size_t n_max);

// The caterpillar with Grundy value 10: spine of 37 vertices.
CaterpillarSpec grundy_ten_caterpillar();

// The 8-vertex bistar S_{1,1} -2- S_{1,2} and its vertex u (the middle of the
// right star's length-2 arm).
BistarSpec counterexample_bistar();
Vertex counterexample_vertex();

struct SearchLimits {
  std::size_t cache_cap = EvalCache::kDefaultCap;
  std::size_t max_instances = 0;  // 0: no limit
};

struct SearchHit {
  CaterpillarSpec spec;
  GrundyValue value = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  GrundyValue max_value = 0;
  CaterpillarSpec max_witness;
  std::size_t examined = 0;
  std::vector<CaterpillarSpec> skipped;  // hit the cache cap
  bool truncated = false;                // stopped at max_instances
};

// Caterpillars with spine length 1..spine_max and legs on interior spine
// vertices, one per mirror pair, in order of spine length then leg mask.
// Collects those whose value equals `target`.
SearchResult search_caterpillars(std::size_t spine_max, GrundyValue target,
                                 const SearchLimits& limits = {});

nlohmann::ordered_json to_json(const SearchResult& result);

}  // namespace octal::verify
