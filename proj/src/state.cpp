#include "lsbench/state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lsb {

Coord NumberBoard::find_empty() const {
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      if (at({r, c}) == 0) return {r, c};
  throw std::logic_error("NumberBoard has no empty square");
}

PieceColor flipped(PieceColor c) {
  return c == PieceColor::Black ? PieceColor::White : PieceColor::Black;
}

std::string to_string(PieceColor c) {
  return c == PieceColor::Black ? "black" : "white";
}

bool FileSystemState::has_file(const std::string& path, const std::string& name) const {
  const auto it = contents.find(path);
  if (it == contents.end()) return false;
  return std::find(it->second.begin(), it->second.end(), name) != it->second.end();
}

bool FileSystemState::operator==(const FileSystemState& other) const {
  if (paths != other.paths) return false;
  for (const auto& p : paths) {
    auto a = contents.count(p) ? contents.at(p) : std::vector<std::string>{};
    auto b = other.contents.count(p) ? other.contents.at(p) : std::vector<std::string>{};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

bool CardPiles::contains_anywhere(const Card& c) const {
  for (const auto& [name, pile] : piles)
    if (std::find(pile.begin(), pile.end(), c) != pile.end()) return true;
  return false;
}

int ChipCups::total(const std::string& cup) const {
  const auto it = cups.find(cup);
  if (it == cups.end()) return 0;
  return std::accumulate(it->second.begin(), it->second.end(), 0);
}

bool ChipCups::operator==(const ChipCups& other) const {
  if (cup_names != other.cup_names) return false;
  for (const auto& c : cup_names) {
    auto a = cups.count(c) ? cups.at(c) : std::vector<int>{};
    auto b = other.cups.count(c) ? other.cups.at(c) : std::vector<int>{};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

DemoKind demo_kind(const State& s) {
  switch (s.index()) {
    case 0: return DemoKind::Number;
    case 1: return DemoKind::Circle;
    case 2: return DemoKind::Cup;
    case 3: return DemoKind::File;
    case 4: return DemoKind::Card;
    case 5: return DemoKind::Chip;
  }
  throw std::logic_error("bad State variant");
}

DemoKind demo_kind(const Operation& op) {
  switch (op.index()) {
    case 0: return DemoKind::Number;
    case 1: return DemoKind::Circle;
    case 2: return DemoKind::Cup;
    case 3: return DemoKind::File;
    case 4: return DemoKind::Card;
    case 5: return DemoKind::Chip;
  }
  throw std::logic_error("bad Operation variant");
}

std::string to_string(FileCmdKind k) {
  switch (k) {
    case FileCmdKind::Touch: return "touch";
    case FileCmdKind::Rm: return "rm -rf";
    case FileCmdKind::Cp: return "cp";
    case FileCmdKind::Mv: return "mv";
  }
  throw std::logic_error("bad FileCmdKind");
}

std::string render_file_cmd(const FileCmdOp& op) {
  if (op.kind == FileCmdKind::Touch || op.kind == FileCmdKind::Rm) {
    std::string args;
    for (std::size_t i = 0; i < op.names.size(); ++i) {
      if (i) args += ",";
      args += op.names[i];
    }
    return to_string(op.kind) + " " + op.path + "/{" + args + "}";
  }
  return to_string(op.kind) + " " + op.src_path + "/" + op.name + " " + op.dst_path + "/";
}

std::string render_card_act(const CardActOp& op) {
  if (op.add) return "add " + to_string(op.card) + " to " + op.pile;
  return "remove " + to_string(op.card) + " from " + op.pile;
}

std::string render_chip_act(const ChipActOp& op) {
  if (op.add) return "add " + std::to_string(op.value) + " to " + op.cup;
  return "remove " + std::to_string(op.value) + " from " + op.cup;
}

bool StateDiff::empty() const {
  if (!cells.empty() || circle_moved) return false;
  for (const auto& [name, d] : containers)
    if (!d.only_in_first.empty() || !d.only_in_second.empty()) return false;
  for (const auto& [name, t] : totals)
    if (t.first != t.second) return false;
  return true;
}

} // namespace lsb
