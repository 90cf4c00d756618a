#include "lsbench/types.hpp"

#include <algorithm>
#include <cctype>

namespace lsb {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

} // namespace

bool is_board_demo(DemoKind k) {
  return k == DemoKind::Number || k == DemoKind::Circle || k == DemoKind::Cup;
}

std::string to_string(DemoKind k) {
  switch (k) {
    case DemoKind::Number: return "number";
    case DemoKind::Circle: return "circle";
    case DemoKind::Cup: return "cup";
    case DemoKind::File: return "file";
    case DemoKind::Card: return "card";
    case DemoKind::Chip: return "chip";
  }
  throw std::logic_error("bad DemoKind");
}

DemoKind demo_kind_from_string(std::string_view s) {
  const std::string v = lower(s);
  if (v == "number") return DemoKind::Number;
  if (v == "circle") return DemoKind::Circle;
  if (v == "cup") return DemoKind::Cup;
  if (v == "file") return DemoKind::File;
  if (v == "card") return DemoKind::Card;
  if (v == "chip") return DemoKind::Chip;
  throw std::invalid_argument("unknown demo kind: " + std::string(s));
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Left: return "left";
    case Direction::Right: return "right";
    case Direction::Up: return "up";
    case Direction::Down: return "down";
  }
  throw std::logic_error("bad Direction");
}

Direction direction_from_string(std::string_view s) {
  const std::string v = lower(s);
  if (v == "left") return Direction::Left;
  if (v == "right") return Direction::Right;
  if (v == "up") return Direction::Up;
  if (v == "down") return Direction::Down;
  throw std::invalid_argument("unknown direction: " + std::string(s));
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
    case Direction::Up: return Direction::Down;
    case Direction::Down: return Direction::Up;
  }
  throw std::logic_error("bad Direction");
}

std::string number_coord(Coord c) {
  std::string out = "(";
  out += static_cast<char>('a' + c.row);
  out += ",";
  out += std::to_string(c.col + 1);
  out += ")";
  return out;
}

std::string circle_coord(Coord c) {
  std::string out = "(";
  out += static_cast<char>('a' + c.col);
  out += ",";
  out += std::to_string(c.row);
  out += ")";
  return out;
}

std::string cup_coord(Coord c) {
  std::string out;
  out += static_cast<char>('a' + c.col);
  out += std::to_string(c.row + 1);
  return out;
}

std::string cup_coord_parenthesized(Coord c) {
  std::string out = "(";
  out += static_cast<char>('a' + c.col);
  out += ",";
  out += std::to_string(c.row + 1);
  out += ")";
  return out;
}

std::string to_string(Suit s) {
  switch (s) {
    case Suit::Hearts: return "Hearts";
    case Suit::Diamonds: return "Diamonds";
    case Suit::Clubs: return "Clubs";
    case Suit::Spades: return "Spades";
  }
  throw std::logic_error("bad Suit");
}

Suit suit_from_string(std::string_view s) {
  const std::string v = lower(s);
  if (v == "hearts" || v == "heart") return Suit::Hearts;
  if (v == "diamonds" || v == "diamond") return Suit::Diamonds;
  if (v == "clubs" || v == "club") return Suit::Clubs;
  if (v == "spades" || v == "spade") return Suit::Spades;
  throw std::invalid_argument("unknown suit: " + std::string(s));
}

std::string card_value_name(int value) {
  switch (value) {
    case 1: return "Ace";
    case 11: return "Jack";
    case 12: return "Queen";
    case 13: return "King";
    default:
      if (value >= 2 && value <= 10) return std::to_string(value);
  }
  throw std::invalid_argument("bad card value " + std::to_string(value));
}

int card_value_from_string(std::string_view s) {
  const std::string v = lower(s);
  if (v == "ace" || v == "a") return 1;
  if (v == "jack" || v == "j") return 11;
  if (v == "queen" || v == "q") return 12;
  if (v == "king" || v == "k") return 13;
  try {
    const int n = std::stoi(std::string(v));
    if (n >= 2 && n <= 10) return n;
  } catch (...) {
  }
  return -1;
}

std::string to_string(const Card& c) {
  return card_value_name(c.value) + " of " + to_string(c.suit);
}

bool is_legal_chip(int value) {
  return std::find(chip_denominations.begin(), chip_denominations.end(), value) !=
         chip_denominations.end();
}

std::string to_string(Skill s) {
  switch (s) {
    case Skill::RecallOrder: return "recall_order";
    case Skill::RecallCount: return "recall_count";
    case Skill::InferState: return "infer_state";
    case Skill::CompareState: return "compare_state";
    case Skill::PredictState: return "predict_state";
    case Skill::PredictOperation: return "predict_operation";
  }
  throw std::logic_error("bad Skill");
}

Skill skill_from_string(std::string_view s) {
  const std::string v = lower(s);
  if (v == "recall_order") return Skill::RecallOrder;
  if (v == "recall_count") return Skill::RecallCount;
  if (v == "infer_state") return Skill::InferState;
  if (v == "compare_state") return Skill::CompareState;
  if (v == "predict_state") return Skill::PredictState;
  if (v == "predict_operation") return Skill::PredictOperation;
  throw std::invalid_argument("unknown skill: " + std::string(s));
}

int skill_level(Skill s) {
  switch (s) {
    case Skill::RecallOrder:
    case Skill::RecallCount: return 1;
    case Skill::InferState:
    case Skill::CompareState: return 2;
    case Skill::PredictState:
    case Skill::PredictOperation: return 3;
  }
  throw std::logic_error("bad Skill");
}

std::string to_string(Reveal r) {
  return r == Reveal::Begin ? "begin" : "end";
}

Reveal reveal_from_string(std::string_view s) {
  const std::string v = lower(s);
  if (v == "begin" || v == "start") return Reveal::Begin;
  if (v == "end") return Reveal::End;
  throw std::invalid_argument("unknown reveal timing: " + std::string(s));
}

std::string ordinal(int n) {
  const int mod100 = n % 100;
  const int mod10 = n % 10;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    if (mod10 == 1) suffix = "st";
    else if (mod10 == 2) suffix = "nd";
    else if (mod10 == 3) suffix = "rd";
  }
  return std::to_string(n) + suffix;
}

} // namespace lsb
