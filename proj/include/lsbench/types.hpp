#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lsb {

// The six demonstration families a scenario can belong to.
enum class DemoKind { Number, Circle, Cup, File, Card, Chip };

constexpr std::array<DemoKind, 6> all_demo_kinds = {
    DemoKind::Number, DemoKind::Circle, DemoKind::Cup,
    DemoKind::File,   DemoKind::Card,   DemoKind::Chip};

// Board demonstrations use an N x N grid; container demonstrations use
// 1 or 2 named containers (paths, piles, cups).
bool is_board_demo(DemoKind k);

std::string to_string(DemoKind k);
DemoKind demo_kind_from_string(std::string_view s);

enum class Direction { Left, Right, Up, Down };

std::string to_string(Direction d);
Direction direction_from_string(std::string_view s);
Direction opposite(Direction d);

// Zero-based (row, col). Row 0 is the top row, col 0 the leftmost column.
// Display conventions differ per demo:
//   Number: "(a,1)" = (row letter, 1-based column)
//   Circle: "(a,0)" = (column letter, 0-based row)
//   Cup:    "a1"    = (column letter, 1-based row)
struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

std::string number_coord(Coord c);            // "(a,1)"
std::string circle_coord(Coord c);            // "(a,0)"
std::string cup_coord(Coord c);               // "a1"
std::string cup_coord_parenthesized(Coord c); // "(a,1)", used by vid2txt

enum class Suit { Hearts, Diamonds, Clubs, Spades };

std::string to_string(Suit s);
Suit suit_from_string(std::string_view s);

// value 1 = Ace, 11..13 = Jack/Queen/King, 2..10 literal.
struct Card {
  int value = 0;
  Suit suit = Suit::Hearts;
  auto operator<=>(const Card&) const = default;
};

std::string to_string(const Card& c); // "King of Diamonds"
std::string card_value_name(int value);
int card_value_from_string(std::string_view s); // -1 if unknown

constexpr std::array<int, 5> chip_denominations = {5, 10, 20, 50, 100};
bool is_legal_chip(int value);

enum class Skill {
  RecallOrder,
  RecallCount,
  InferState,
  CompareState,
  PredictState,
  PredictOperation
};

constexpr std::array<Skill, 6> all_skills = {
    Skill::RecallOrder,  Skill::RecallCount,  Skill::InferState,
    Skill::CompareState, Skill::PredictState, Skill::PredictOperation};

std::string to_string(Skill s);
Skill skill_from_string(std::string_view s);
int skill_level(Skill s); // 1, 2 or 3

enum class Reveal { Begin, End };

std::string to_string(Reveal r);
Reveal reveal_from_string(std::string_view s);

// "1st", "2nd", "3rd", "11th", "21st", ...
std::string ordinal(int n);

} // namespace lsb
