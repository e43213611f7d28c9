#pragma once

// Hamiltonian cycles of built instances back to calls, and calls forward to
// rows: decoding, expansion into round blocks over the extent, and an
// independent row-level verifier.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringhcp/builder.hpp"
#include "ringhcp/groups.hpp"
#include "ringhcp/rows.hpp"
#include "ringhcp/sixes.hpp"
#include "ringhcp/solver.hpp"

namespace ringhcp {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExpandError : public std::runtime_error {
 public:
  ExpandError(const std::string& what, std::size_t block, std::size_t call)
      : std::runtime_error(what), block_(block), call_(call) {}
  std::size_t block() const { return block_; }
  std::size_t call_position() const { return call_; }

 private:
  std::size_t block_, call_;
};

struct CallSequence {
  Method method = Method::erin;
  std::string group_index;
  SixEndRef start;          // six-end the first call leaves from
  std::vector<Call> calls;  // one per six of a part, cyclic

  friend bool operator==(const CallSequence&, const CallSequence&) = default;
};

// Orients the cycle so every gadget is swept incoming -> outgoing and reads
// the calls off the wiring edges, starting with the edge leaving gadget 1.
// Throws DecodeError naming the offending gadget or edge.
CallSequence decode(const Instance& inst, std::span<const int> cycle);

// Wiring edges (outgoing vertex, incoming vertex) walked by the calls,
// ascending.
std::vector<std::pair<int, int>> encode_wiring(const Instance& inst, const CallSequence& cs);

struct RoundBlocks {
  // Each block is cyclic and starts with the first row of a six.
  std::vector<std::vector<Row>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  std::size_t row_count() const;
};

struct ExpandOptions {
  // Throw ExpandError when a row recurs or a part ends off the part
  // starts. Without it, each block is replayed until it returns to its
  // start (or runs past the extent size), for inspection by verify_peal.
  bool strict = true;
};

RoundBlocks expand(const CallSequence& cs, const PartGroup& group, ExpandOptions options = {});
RoundBlocks expand(const CallSequence& cs, ExpandOptions options = {});

enum class VerdictKind { peal, round_block_cover, invalid };

struct PealVerdict {
  VerdictKind kind = VerdictKind::invalid;
  std::size_t block_count = 0;
  std::size_t row_count = 0;
  // Index of the first change (counted across blocks) breaking the method.
  std::optional<std::size_t> first_bad_change;
  std::string message;
};

// Re-derives every change from the rows alone.
PealVerdict verify_peal(const RoundBlocks& blocks, Method method);

std::string_view to_string(VerdictKind k);

// "<method> <group> <start>" then one call token per line.
void write_calls(std::ostream& out, const CallSequence& cs);
CallSequence read_calls(std::istream& in);
// "14 sixes; bobs at 2 5 9" (1-based positions within the part).
std::string format_concise(const CallSequence& cs);

}  // namespace ringhcp
