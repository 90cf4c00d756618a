#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lsbench/state.hpp"

namespace lsb {

enum class InvalidReason {
  None,
  OutOfBounds,          // Number/Circle move past the boundary, Cup coord outside board
  IdenticalCoords,      // Cup swap of a square with itself
  TouchTargetExists,    // File
  RmTargetMissing,      // File
  SourceMissing,        // File cp/mv
  DestinationOccupied,  // File cp/mv
  UnknownContainer,     // File/Card/Chip name not present in the state
  RemoveFromEmptyPile,  // Card
  CardAlreadyPresent,   // Card add
  CardNotAtBottom,      // Card remove names a card other than the bottom one
  ChipAbsent,           // Chip remove
  IllegalDenomination,  // Chip add outside {5,10,20,50,100}
  EmptyArguments        // File touch/rm with no names
};

std::string to_string(InvalidReason r);

struct Validity {
  InvalidReason reason = InvalidReason::None;
  std::string detail;

  bool ok() const { return reason == InvalidReason::None; }
  static Validity valid() { return {}; }
  static Validity invalid(InvalidReason r, std::string d = {}) {
    return {r, std::move(d)};
  }
};

// Checks whether op may be applied to state. A demo-kind mismatch is a caller
// bug, not an invalid move, and throws std::invalid_argument.
Validity validate_op(const State& state, const Operation& op);

// Applies a validated op; throws std::invalid_argument (with the validation
// detail) if the op is invalid. The input state is never partially mutated.
State apply_op(const State& state, const Operation& op);

struct SequenceError {
  std::size_t index = 0; // 1-based index of the first invalid op
  Validity validity;
};

struct SequenceResult {
  State state;
  std::optional<SequenceError> error;

  bool ok() const { return !error.has_value(); }
};

// Left fold of apply_op. On the first invalid op, stops and reports its
// 1-based index; the returned state is the last valid intermediate.
SequenceResult apply_sequence(const State& state, const std::vector<Operation>& ops);

// Exact difference record. Requires equal demo kinds and dimensions
// (throws std::invalid_argument on shape mismatch).
StateDiff diff_states(const State& a, const State& b);

// Position of the tile moved by a slide (the square adjacent to the empty
// cell on the side the movement originates from).
Coord slide_source(const NumberBoard& b, Direction dir);

// Grid step in the display convention: "up" decreases the row index.
Coord step(Coord c, Direction dir);

} // namespace lsb
