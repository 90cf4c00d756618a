#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lsbench/types.hpp"

namespace lsb {

// N x N sliding-number board. cells is row-major; 0 marks the empty square.
struct NumberBoard {
  int size = 0;
  std::vector<int> cells;

  int at(Coord c) const { return cells[static_cast<std::size_t>(c.row * size + c.col)]; }
  void set(Coord c, int v) { cells[static_cast<std::size_t>(c.row * size + c.col)] = v; }
  Coord find_empty() const;
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < size && c.col >= 0 && c.col < size;
  }
  bool operator==(const NumberBoard&) const = default;
};

enum class PieceColor { Black, White };
PieceColor flipped(PieceColor c);
std::string to_string(PieceColor c);

// N x N grid of black/white pieces plus the red circle position.
struct CircleGrid {
  int size = 0;
  std::vector<PieceColor> colors; // row-major
  Coord circle;

  PieceColor at(Coord c) const {
    return colors[static_cast<std::size_t>(c.row * size + c.col)];
  }
  void flip(Coord c) {
    auto& v = colors[static_cast<std::size_t>(c.row * size + c.col)];
    v = flipped(v);
  }
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < size && c.col >= 0 && c.col < size;
  }
  bool operator==(const CircleGrid&) const = default;
};

// N x N board of cups; coins records which squares hide a coin.
struct CupBoard {
  int size = 0;
  std::set<Coord> coins;

  bool has_coin(Coord c) const { return coins.count(c) != 0; }
  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.row < size && c.col >= 0 && c.col < size;
  }
  bool operator==(const CupBoard&) const = default;
};

// One or two directories of flat files. Lists keep insertion order so that
// transcripts and reloaded scenarios render identically; comparisons treat
// them as sets.
struct FileSystemState {
  std::vector<std::string> paths;                          // "path0", "path1"
  std::map<std::string, std::vector<std::string>> contents;

  bool has_file(const std::string& path, const std::string& name) const;
  bool operator==(const FileSystemState& other) const;
};

// Card piles; index 0 of each pile is the top card.
struct CardPiles {
  std::vector<std::string> pile_names; // "pile0", "pile1"
  std::map<std::string, std::vector<Card>> piles;

  bool contains_anywhere(const Card& c) const;
  bool operator==(const CardPiles&) const = default;
};

// Cups of chips; each cup holds a multiset of denominations. Vectors keep
// insertion order for display, comparisons are order-insensitive.
struct ChipCups {
  std::vector<std::string> cup_names; // "cup0", "cup1"
  std::map<std::string, std::vector<int>> cups;

  int total(const std::string& cup) const;
  bool operator==(const ChipCups& other) const;
};

using State =
    std::variant<NumberBoard, CircleGrid, CupBoard, FileSystemState, CardPiles, ChipCups>;

DemoKind demo_kind(const State& s);

enum class FileCmdKind { Touch, Rm, Cp, Mv };
std::string to_string(FileCmdKind k);

struct SlideOp {
  Direction dir = Direction::Left;
  bool operator==(const SlideOp&) const = default;
};

struct CircleMoveOp {
  Direction dir = Direction::Left;
  bool operator==(const CircleMoveOp&) const = default;
};

struct CupSwapOp {
  Coord a;
  Coord b;
  bool operator==(const CupSwapOp&) const = default;
};

struct FileCmdOp {
  FileCmdKind kind = FileCmdKind::Touch;
  // touch / rm
  std::string path;
  std::vector<std::string> names;
  // cp / mv
  std::string src_path;
  std::string dst_path;
  std::string name;
  bool operator==(const FileCmdOp&) const = default;
};

struct CardActOp {
  bool add = true;
  Card card;
  std::string pile;
  bool operator==(const CardActOp&) const = default;
};

struct ChipActOp {
  bool add = true;
  int value = 0;
  std::string cup;
  bool operator==(const ChipActOp&) const = default;
};

using Operation =
    std::variant<SlideOp, CircleMoveOp, CupSwapOp, FileCmdOp, CardActOp, ChipActOp>;

DemoKind demo_kind(const Operation& op);

// Shell-style rendering: "touch path0/{a.txt,b.txt}", "cp path0/a.txt path1/".
std::string render_file_cmd(const FileCmdOp& op);
// Action phrases: "add 20 to cup0", "add Queen of Clubs to pile0",
// "remove 7 of Spades from pile0".
std::string render_card_act(const CardActOp& op);
std::string render_chip_act(const ChipActOp& op);

// Demonstration-specific difference record between two states of equal shape.
struct StateDiff {
  // Board demos: coordinate -> rendered value at each endpoint.
  struct CellDiff {
    Coord coord;
    std::string first;
    std::string second;
    bool operator==(const CellDiff&) const = default;
  };
  std::vector<CellDiff> cells;

  // Circle only: tracked actuator motion (not part of the cell diff).
  bool circle_moved = false;

  // File / Card: per-container set differences.
  struct ContainerDiff {
    std::vector<std::string> only_in_first;
    std::vector<std::string> only_in_second;
    bool operator==(const ContainerDiff&) const = default;
  };
  std::map<std::string, ContainerDiff> containers;

  // Chip: per-cup totals at each endpoint.
  struct TotalDiff {
    int first = 0;
    int second = 0;
    bool operator==(const TotalDiff&) const = default;
  };
  std::map<std::string, TotalDiff> totals;

  bool empty() const;
};

} // namespace lsb
