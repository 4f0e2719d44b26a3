#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octal/graph.hpp"

namespace octal {

using GrundyValue = std::uint32_t;

// Flags of one code digit u = b1 + 2*b2 + 4*b3.
struct DigitFlags {
  bool take_whole = false;      // b1: may remove the whole component
  bool leave_connected = false; // b2: may leave it nonempty and connected
  bool disconnect = false;      // b3: may split it (any number of pieces)

  static DigitFlags decompose(unsigned digit);
  unsigned recompose() const;
};

class CodeParseError : public std::invalid_argument {
 public:
  CodeParseError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// A finite octal code 0.u1u2...uk with uk != 0.
class OctalCode {
 public:
  // Accepts exactly "0." followed by one or more octal digits, the last one
  // nonzero. Throws CodeParseError naming the offending character.
  static OctalCode parse(const std::string& text);

  // digits[i] is u_{i+1}.
  const std::vector<unsigned>& digits() const { return digits_; }
  std::size_t max_removal() const { return digits_.size(); }
  // Digit governing removal of `count` vertices (0 when out of range).
  unsigned digit(std::size_t count) const;
  DigitFlags flags(std::size_t count) const { return DigitFlags::decompose(digit(count)); }
  std::string str() const;

  friend bool operator==(const OctalCode&, const OctalCode&) = default;

 private:
  std::vector<unsigned> digits_;
};

inline OctalCode parse_code(const std::string& text) { return OctalCode::parse(text); }

// Which flag authorized a move.
enum class MoveClause { TakeComponent, LeaveConnected, Disconnect };

const char* to_string(MoveClause c);

struct Move {
  VertexSet removed;
  MoveClause clause = MoveClause::TakeComponent;

  friend bool operator==(const Move&, const Move&) = default;
};

// Clause that describes removing `removed` from `g`, regardless of whether
// the code allows it; nullopt when `removed` is empty, not induced-connected
// or out of range.
std::optional<MoveClause> classify_removal(const Graph& g, const VertexSet& removed);

// All legal moves of `code` on `g`, ordered by removal size then
// lexicographically.
std::vector<Move> legal_moves(const Graph& g, const OctalCode& code);

// Grundy values of the classical octal game on heaps, grown on demand.
// Confine an instance to one thread.
class HeapGrundyTable {
 public:
  explicit HeapGrundyTable(OctalCode code);

  GrundyValue value(std::size_t heap);
  const OctalCode& code() const { return code_; }

 private:
  OctalCode code_;
  std::vector<GrundyValue> values_{0};
};

GrundyValue heap_grundy(const OctalCode& code, std::size_t heap, HeapGrundyTable& cache);
GrundyValue heap_grundy(const OctalCode& code, std::size_t heap);

// G(0), ..., G(n_max).
std::vector<GrundyValue> grundy_sequence(const OctalCode& code, std::size_t n_max);

struct Period {
  std::size_t preperiod = 0;
  std::size_t period = 0;

  friend bool operator==(const Period&, const Period&) = default;
};

// Smallest period p, then smallest preperiod s for it, such that
// seq[i] == seq[i+p] for every s <= i < seq.size() - p and the checked
// window seq[s..] holds at least 2p entries. A candidate, not a proof.
std::optional<Period> detect_period(const std::vector<GrundyValue>& seq);

}  // namespace octal
