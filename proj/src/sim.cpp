#include "lsbench/sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsb {

namespace {

void require_same_kind(DemoKind a, DemoKind b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": demo kind mismatch (" +
                                to_string(a) + " vs " + to_string(b) + ")");
}

Validity validate_slide(const NumberBoard& b, const SlideOp& op) {
  const Coord src = slide_source(b, op.dir);
  if (!b.in_bounds(src))
    return Validity::invalid(InvalidReason::OutOfBounds,
                             "no tile can move " + to_string(op.dir) +
                                 " into the empty square");
  return Validity::valid();
}

Validity validate_circle(const CircleGrid& g, const CircleMoveOp& op) {
  const Coord dst = step(g.circle, op.dir);
  if (!g.in_bounds(dst))
    return Validity::invalid(InvalidReason::OutOfBounds,
                             "circle cannot move " + to_string(op.dir) +
                                 " beyond the grid boundary");
  return Validity::valid();
}

Validity validate_cup(const CupBoard& b, const CupSwapOp& op) {
  if (!b.in_bounds(op.a) || !b.in_bounds(op.b))
    return Validity::invalid(InvalidReason::OutOfBounds, "swap coordinate outside board");
  if (op.a == op.b)
    return Validity::invalid(InvalidReason::IdenticalCoords,
                             "swap requires two distinct cups");
  return Validity::valid();
}

Validity validate_file(const FileSystemState& fs, const FileCmdOp& op) {
  const auto known = [&](const std::string& p) {
    return std::find(fs.paths.begin(), fs.paths.end(), p) != fs.paths.end();
  };
  if (op.kind == FileCmdKind::Touch || op.kind == FileCmdKind::Rm) {
    if (!known(op.path))
      return Validity::invalid(InvalidReason::UnknownContainer, op.path);
    if (op.names.empty())
      return Validity::invalid(InvalidReason::EmptyArguments);
    for (const auto& n : op.names) {
      if (op.kind == FileCmdKind::Touch && fs.has_file(op.path, n))
        return Validity::invalid(InvalidReason::TouchTargetExists, op.path + "/" + n);
      if (op.kind == FileCmdKind::Rm && !fs.has_file(op.path, n))
        return Validity::invalid(InvalidReason::RmTargetMissing, op.path + "/" + n);
    }
    // duplicate names within one brace list would double-create/delete
    auto unique = op.names;
    std::sort(unique.begin(), unique.end());
    if (std::adjacent_find(unique.begin(), unique.end()) != unique.end())
      return Validity::invalid(InvalidReason::EmptyArguments, "duplicate name in argument list");
    return Validity::valid();
  }
  if (!known(op.src_path))
    return Validity::invalid(InvalidReason::UnknownContainer, op.src_path);
  if (!known(op.dst_path))
    return Validity::invalid(InvalidReason::UnknownContainer, op.dst_path);
  if (!fs.has_file(op.src_path, op.name))
    return Validity::invalid(InvalidReason::SourceMissing, op.src_path + "/" + op.name);
  if (fs.has_file(op.dst_path, op.name))
    return Validity::invalid(InvalidReason::DestinationOccupied, op.dst_path + "/" + op.name);
  if (op.src_path == op.dst_path)
    return Validity::invalid(InvalidReason::DestinationOccupied,
                             "source and destination are the same path");
  return Validity::valid();
}

Validity validate_card(const CardPiles& p, const CardActOp& op) {
  const auto it = p.piles.find(op.pile);
  if (it == p.piles.end())
    return Validity::invalid(InvalidReason::UnknownContainer, op.pile);
  if (op.card.value < 1 || op.card.value > 13)
    return Validity::invalid(InvalidReason::CardAlreadyPresent, "malformed card");
  if (op.add) {
    if (p.contains_anywhere(op.card))
      return Validity::invalid(InvalidReason::CardAlreadyPresent, to_string(op.card));
    return Validity::valid();
  }
  if (it->second.empty())
    return Validity::invalid(InvalidReason::RemoveFromEmptyPile, op.pile);
  if (!(it->second.back() == op.card))
    return Validity::invalid(InvalidReason::CardNotAtBottom,
                             to_string(op.card) + " is not at the bottom of " + op.pile);
  return Validity::valid();
}

Validity validate_chip(const ChipCups& c, const ChipActOp& op) {
  const auto it = c.cups.find(op.cup);
  if (it == c.cups.end())
    return Validity::invalid(InvalidReason::UnknownContainer, op.cup);
  if (!is_legal_chip(op.value))
    return Validity::invalid(InvalidReason::IllegalDenomination, std::to_string(op.value));
  if (!op.add &&
      std::find(it->second.begin(), it->second.end(), op.value) == it->second.end())
    return Validity::invalid(InvalidReason::ChipAbsent,
                             std::to_string(op.value) + " not in " + op.cup);
  return Validity::valid();
}

} // namespace

std::string to_string(InvalidReason r) {
  switch (r) {
    case InvalidReason::None: return "valid";
    case InvalidReason::OutOfBounds: return "out_of_bounds";
    case InvalidReason::IdenticalCoords: return "identical_coords";
    case InvalidReason::TouchTargetExists: return "touch_target_exists";
    case InvalidReason::RmTargetMissing: return "rm_target_missing";
    case InvalidReason::SourceMissing: return "source_missing";
    case InvalidReason::DestinationOccupied: return "destination_occupied";
    case InvalidReason::UnknownContainer: return "unknown_container";
    case InvalidReason::RemoveFromEmptyPile: return "remove_from_empty_pile";
    case InvalidReason::CardAlreadyPresent: return "card_already_present";
    case InvalidReason::CardNotAtBottom: return "card_not_at_bottom";
    case InvalidReason::ChipAbsent: return "chip_absent";
    case InvalidReason::IllegalDenomination: return "illegal_denomination";
    case InvalidReason::EmptyArguments: return "empty_arguments";
  }
  throw std::logic_error("bad InvalidReason");
}

Coord step(Coord c, Direction dir) {
  switch (dir) {
    case Direction::Left: return {c.row, c.col - 1};
    case Direction::Right: return {c.row, c.col + 1};
    case Direction::Up: return {c.row - 1, c.col};
    case Direction::Down: return {c.row + 1, c.col};
  }
  throw std::logic_error("bad Direction");
}

Coord slide_source(const NumberBoard& b, Direction dir) {
  // The tile moves `dir` into the empty square, so it starts one step on the
  // opposite side of the empty cell.
  return step(b.find_empty(), opposite(dir));
}

Validity validate_op(const State& state, const Operation& op) {
  require_same_kind(demo_kind(state), demo_kind(op), "validate_op");
  return std::visit(
      [&](const auto& o) -> Validity {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SlideOp>)
          return validate_slide(std::get<NumberBoard>(state), o);
        else if constexpr (std::is_same_v<T, CircleMoveOp>)
          return validate_circle(std::get<CircleGrid>(state), o);
        else if constexpr (std::is_same_v<T, CupSwapOp>)
          return validate_cup(std::get<CupBoard>(state), o);
        else if constexpr (std::is_same_v<T, FileCmdOp>)
          return validate_file(std::get<FileSystemState>(state), o);
        else if constexpr (std::is_same_v<T, CardActOp>)
          return validate_card(std::get<CardPiles>(state), o);
        else
          return validate_chip(std::get<ChipCups>(state), o);
      },
      op);
}

State apply_op(const State& state, const Operation& op) {
  const Validity v = validate_op(state, op);
  if (!v.ok())
    throw std::invalid_argument("apply_op: invalid op (" + to_string(v.reason) +
                                (v.detail.empty() ? "" : ": " + v.detail) + ")");

  State out = state;
  if (const auto* slide = std::get_if<SlideOp>(&op)) {
    auto& b = std::get<NumberBoard>(out);
    const Coord empty = b.find_empty();
    const Coord src = slide_source(b, slide->dir);
    b.set(empty, b.at(src));
    b.set(src, 0);
  } else if (const auto* mv = std::get_if<CircleMoveOp>(&op)) {
    auto& g = std::get<CircleGrid>(out);
    const Coord dst = step(g.circle, mv->dir);
    g.circle = dst;
    g.flip(dst);
    for (const Direction d :
         {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
      const Coord n = step(dst, d);
      if (g.in_bounds(n)) g.flip(n);
    }
  } else if (const auto* swap = std::get_if<CupSwapOp>(&op)) {
    auto& b = std::get<CupBoard>(out);
    const bool coin_a = b.has_coin(swap->a);
    const bool coin_b = b.has_coin(swap->b);
    if (coin_a != coin_b) {
      if (coin_a) {
        b.coins.erase(swap->a);
        b.coins.insert(swap->b);
      } else {
        b.coins.erase(swap->b);
        b.coins.insert(swap->a);
      }
    }
  } else if (const auto* cmd = std::get_if<FileCmdOp>(&op)) {
    auto& fs = std::get<FileSystemState>(out);
    switch (cmd->kind) {
      case FileCmdKind::Touch:
        for (const auto& n : cmd->names) fs.contents[cmd->path].push_back(n);
        break;
      case FileCmdKind::Rm:
        for (const auto& n : cmd->names) {
          auto& files = fs.contents[cmd->path];
          files.erase(std::find(files.begin(), files.end(), n));
        }
        break;
      case FileCmdKind::Cp:
        fs.contents[cmd->dst_path].push_back(cmd->name);
        break;
      case FileCmdKind::Mv: {
        auto& src = fs.contents[cmd->src_path];
        src.erase(std::find(src.begin(), src.end(), cmd->name));
        fs.contents[cmd->dst_path].push_back(cmd->name);
        break;
      }
    }
  } else if (const auto* act = std::get_if<CardActOp>(&op)) {
    auto& p = std::get<CardPiles>(out);
    auto& pile = p.piles[act->pile];
    if (act->add)
      pile.insert(pile.begin(), act->card); // top of the pile
    else
      pile.pop_back(); // bottom of the pile
  } else if (const auto* chip = std::get_if<ChipActOp>(&op)) {
    auto& c = std::get<ChipCups>(out);
    auto& cup = c.cups[chip->cup];
    if (chip->add)
      cup.push_back(chip->value);
    else
      cup.erase(std::find(cup.begin(), cup.end(), chip->value));
  }
  return out;
}

SequenceResult apply_sequence(const State& state, const std::vector<Operation>& ops) {
  SequenceResult result{state, std::nullopt};
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Validity v = validate_op(result.state, ops[i]);
    if (!v.ok()) {
      result.error = SequenceError{i + 1, v};
      return result;
    }
    result.state = apply_op(result.state, ops[i]);
  }
  return result;
}

StateDiff diff_states(const State& a, const State& b) {
  require_same_kind(demo_kind(a), demo_kind(b), "diff_states");
  StateDiff diff;

  if (const auto* na = std::get_if<NumberBoard>(&a)) {
    const auto& nb = std::get<NumberBoard>(b);
    if (na->size != nb.size) throw std::invalid_argument("diff_states: board size mismatch");
    for (int r = 0; r < na->size; ++r)
      for (int c = 0; c < na->size; ++c) {
        const Coord pos{r, c};
        if (na->at(pos) != nb.at(pos))
          diff.cells.push_back(
              {pos, std::to_string(na->at(pos)), std::to_string(nb.at(pos))});
      }
  } else if (const auto* ga = std::get_if<CircleGrid>(&a)) {
    const auto& gb = std::get<CircleGrid>(b);
    if (ga->size != gb.size) throw std::invalid_argument("diff_states: grid size mismatch");
    for (int r = 0; r < ga->size; ++r)
      for (int c = 0; c < ga->size; ++c) {
        const Coord pos{r, c};
        if (ga->at(pos) != gb.at(pos))
          diff.cells.push_back({pos, to_string(ga->at(pos)), to_string(gb.at(pos))});
      }
    diff.circle_moved = !(ga->circle == gb.circle);
  } else if (const auto* ca = std::get_if<CupBoard>(&a)) {
    const auto& cb = std::get<CupBoard>(b);
    if (ca->size != cb.size) throw std::invalid_argument("diff_states: board size mismatch");
    for (int r = 0; r < ca->size; ++r)
      for (int c = 0; c < ca->size; ++c) {
        const Coord pos{r, c};
        if (ca->has_coin(pos) != cb.has_coin(pos))
          diff.cells.push_back({pos, ca->has_coin(pos) ? "coin" : "empty",
                                cb.has_coin(pos) ? "coin" : "empty"});
      }
  } else if (const auto* fa = std::get_if<FileSystemState>(&a)) {
    const auto& fb = std::get<FileSystemState>(b);
    if (fa->paths != fb.paths) throw std::invalid_argument("diff_states: path mismatch");
    for (const auto& p : fa->paths) {
      StateDiff::ContainerDiff d;
      const auto& first = fa->contents.count(p) ? fa->contents.at(p) : std::vector<std::string>{};
      const auto& second = fb.contents.count(p) ? fb.contents.at(p) : std::vector<std::string>{};
      for (const auto& n : first)
        if (std::find(second.begin(), second.end(), n) == second.end())
          d.only_in_first.push_back(n);
      for (const auto& n : second)
        if (std::find(first.begin(), first.end(), n) == first.end())
          d.only_in_second.push_back(n);
      diff.containers[p] = std::move(d);
    }
  } else if (const auto* pa = std::get_if<CardPiles>(&a)) {
    const auto& pb = std::get<CardPiles>(b);
    if (pa->pile_names != pb.pile_names)
      throw std::invalid_argument("diff_states: pile mismatch");
    for (const auto& name : pa->pile_names) {
      StateDiff::ContainerDiff d;
      const auto& first = pa->piles.at(name);
      const auto& second = pb.piles.at(name);
      for (const auto& c : first)
        if (std::find(second.begin(), second.end(), c) == second.end())
          d.only_in_first.push_back(to_string(c));
      for (const auto& c : second)
        if (std::find(first.begin(), first.end(), c) == first.end())
          d.only_in_second.push_back(to_string(c));
      diff.containers[name] = std::move(d);
    }
  } else if (const auto* ha = std::get_if<ChipCups>(&a)) {
    const auto& hb = std::get<ChipCups>(b);
    if (ha->cup_names != hb.cup_names)
      throw std::invalid_argument("diff_states: cup mismatch");
    for (const auto& name : ha->cup_names) {
      diff.totals[name] = {ha->total(name), hb.total(name)};
      // Multiset symmetric difference keeps the "empty iff equal" contract
      // even when two different fills share a total.
      auto first = ha->cups.at(name);
      auto second = hb.cups.at(name);
      std::sort(first.begin(), first.end());
      std::sort(second.begin(), second.end());
      StateDiff::ContainerDiff d;
      std::vector<int> only_a, only_b;
      std::set_difference(first.begin(), first.end(), second.begin(), second.end(),
                          std::back_inserter(only_a));
      std::set_difference(second.begin(), second.end(), first.begin(), first.end(),
                          std::back_inserter(only_b));
      for (int v : only_a) d.only_in_first.push_back(std::to_string(v));
      for (int v : only_b) d.only_in_second.push_back(std::to_string(v));
      diff.containers[name] = std::move(d);
    }
  }
  return diff;
}

} // namespace lsb
