#include "lsbench/question.hpp"

#include <algorithm>
#include <stdexcept>

#include "lsbench/sim.hpp"
#include "lsbench/templates.hpp"

namespace lsb {

namespace {

constexpr std::uint64_t kStreamQuestionBase = 100;

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string size_token(int n) {
  return std::to_string(n) + "x" + std::to_string(n);
}

// "touch" -> "`touch` ", "" -> "" (the template reads "{{cmd_type}}commands").
std::string cmd_type_token(const std::string& criterion) {
  return criterion.empty() ? "" : "`" + criterion + "` ";
}

std::string file_type_token(const std::string& ext) {
  return ext.empty() ? "" : "`" + ext + "` ";
}

Direction op_direction(const Operation& op) {
  if (const auto* s = std::get_if<SlideOp>(&op)) return s->dir;
  return std::get<CircleMoveOp>(op).dir;
}

bool file_cmd_matches(const FileCmdOp& op, const std::string& criterion) {
  if (criterion.empty()) return true;
  return to_string(op.kind) == criterion;
}

bool card_matches(const CardActOp& op, const std::string& criterion) {
  return op.add == (criterion == "added to");
}

bool chip_matches(const ChipActOp& op, const std::string& criterion) {
  return op.add == (criterion == "added to");
}

// Indices (0-based) of ops matching a RecallOrder/RecallCount filter.
std::vector<std::size_t> filtered_op_indices(const Scenario& s,
                                             const std::string& criterion) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.ops.size(); ++i) {
    bool match = true;
    if (const auto* f = std::get_if<FileCmdOp>(&s.ops[i]))
      match = file_cmd_matches(*f, criterion);
    else if (const auto* c = std::get_if<CardActOp>(&s.ops[i]))
      match = criterion.empty() || card_matches(*c, criterion);
    else if (const auto* h = std::get_if<ChipActOp>(&s.ops[i]))
      match = criterion.empty() || chip_matches(*h, criterion);
    if (match) out.push_back(i);
  }
  return out;
}

std::vector<std::string> file_names_with_ext(const std::vector<std::string>& names,
                                             const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& n : names)
    if (ext.empty() || (n.size() > ext.size() &&
                        n.compare(n.size() - ext.size(), ext.size(), ext) == 0))
      out.push_back(n);
  return out;
}

const FileSystemState& file_state(const State& s) {
  return std::get<FileSystemState>(s);
}

// Distinct bare names involved in matching commands (touch/rm arguments,
// cp/mv the moved name).
std::vector<std::string> involved_file_names(const Scenario& s,
                                             const std::string& cmd_criterion,
                                             const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& op : s.ops) {
    const auto& cmd = std::get<FileCmdOp>(op);
    if (!file_cmd_matches(cmd, cmd_criterion)) continue;
    std::vector<std::string> names =
        (cmd.kind == FileCmdKind::Touch || cmd.kind == FileCmdKind::Rm)
            ? cmd.names
            : std::vector<std::string>{cmd.name};
    for (const auto& n : file_names_with_ext(names, ext))
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

OpSampler scenario_sampler(const Scenario& s) {
  OpSampler sampler;
  for (const auto& st : s.states) sampler.note_state(st);
  return sampler;
}

std::vector<Operation> sample_op_chain(const Scenario& s, const State& anchor, int count,
                                       Rng& rng) {
  OpSampler sampler = scenario_sampler(s);
  std::vector<Operation> ops;
  State current = anchor;
  std::optional<State> previous;
  for (int i = 0; i < count; ++i) {
    const Operation op = sampler.sample(current, previous, rng);
    previous = current;
    current = apply_op(current, op);
    ops.push_back(op);
  }
  return ops;
}

// ---- rendering ---------------------------------------------------------------

std::string render_card_list(const std::vector<Card>& cards) {
  std::vector<std::string> parts;
  for (const Card& c : cards) parts.push_back(to_string(c));
  return join(parts, ", ");
}

std::string render_chip_values(const std::vector<int>& values) {
  std::vector<std::string> parts;
  for (const int v : values) parts.push_back(std::to_string(v));
  return join(parts, ", ");
}

std::string render_file_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return join(names, ", ");
}

} // namespace

std::string render_number_board(const NumberBoard& b) {
  std::vector<std::string> parts;
  for (int r = 0; r < b.size; ++r)
    for (int c = 0; c < b.size; ++c)
      parts.push_back(number_coord({r, c}) + ": " + std::to_string(b.at({r, c})));
  return join(parts, ", ");
}

std::string render_circle_board(const CircleGrid& g) {
  std::vector<std::string> parts;
  for (int col = 0; col < g.size; ++col)
    for (int row = 0; row < g.size; ++row)
      parts.push_back(circle_coord({row, col}) + ": " + to_string(g.at({row, col})));
  return join(parts, ", ");
}

std::string render_cup_coins(const CupBoard& b) {
  std::vector<std::string> coords;
  for (const Coord& c : b.coins) coords.push_back(cup_coord(c));
  std::sort(coords.begin(), coords.end());
  return join(coords, ", ");
}

std::string render_ops_inline(const std::vector<Operation>& ops) {
  std::vector<std::string> parts;
  std::string sep = ", ";
  for (const auto& op : ops) {
    if (const auto* s = std::get_if<SlideOp>(&op)) parts.push_back(to_string(s->dir));
    else if (const auto* m = std::get_if<CircleMoveOp>(&op)) parts.push_back(to_string(m->dir));
    else if (const auto* w = std::get_if<CupSwapOp>(&op))
      parts.push_back("(" + cup_coord(w->a) + ", " + cup_coord(w->b) + ")");
    else if (const auto* f = std::get_if<FileCmdOp>(&op)) {
      parts.push_back(render_file_cmd(*f));
      sep = " & ";
    } else if (const auto* c = std::get_if<CardActOp>(&op))
      parts.push_back(render_card_act(*c));
    else if (const auto* h = std::get_if<ChipActOp>(&op))
      parts.push_back(render_chip_act(*h));
  }
  return join(parts, sep);
}

bool states_match_in_scope(DemoKind demo, const std::string& container,
                           const State& reached, const State& target) {
  switch (demo) {
    case DemoKind::Number:
      return std::get<NumberBoard>(reached) == std::get<NumberBoard>(target);
    case DemoKind::Circle: {
      // The circle is the actuator, not board content; only colors count.
      const auto& a = std::get<CircleGrid>(reached);
      const auto& b = std::get<CircleGrid>(target);
      return a.size == b.size && a.colors == b.colors;
    }
    case DemoKind::Cup:
      return std::get<CupBoard>(reached) == std::get<CupBoard>(target);
    case DemoKind::File: {
      auto a = file_state(reached).contents.at(container);
      auto b = file_state(target).contents.at(container);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case DemoKind::Card:
      return std::get<CardPiles>(reached).piles.at(container) ==
             std::get<CardPiles>(target).piles.at(container);
    case DemoKind::Chip: {
      auto a = std::get<ChipCups>(reached).cups.at(container);
      auto b = std::get<ChipCups>(target).cups.at(container);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
  }
  throw std::logic_error("bad demo kind");
}

// ---- prompt assembly ----------------------------------------------------------

std::string build_prompt(const Scenario& scenario, Skill skill,
                         const QuestionParams& params) {
  const DemoKind demo = scenario.config.demo;
  std::map<std::string, std::string> values;
  values["size"] = size_token(scenario.config.state_size);

  const std::string& instruction_tmpl =
      task_instruction_template(demo, scenario.config.reveal);
  const std::string instruction = substitute(instruction_tmpl, values);

  values["timestamp"] = params.timestamp;
  values["timestamp2"] = params.timestamp2;
  values["start_id"] = ordinal(params.start_id);
  values["end_id"] = ordinal(params.end_id);

  switch (skill) {
    case Skill::RecallOrder:
      if (demo == DemoKind::File) values["cmd_type"] = cmd_type_token(params.criterion);
      if (demo == DemoKind::Card || demo == DemoKind::Chip)
        values["action_type"] = params.criterion;
      break;
    case Skill::RecallCount:
      if (demo == DemoKind::Number || demo == DemoKind::Circle)
        values["move"] = params.criterion;
      if (demo == DemoKind::Cup) values["row_idx"] = params.criterion;
      if (demo == DemoKind::File) {
        values["cmd_type"] = cmd_type_token(params.criterion);
        values["file_type"] = file_type_token(params.file_type);
      }
      if (demo == DemoKind::Card || demo == DemoKind::Chip) {
        values["action_type"] = params.criterion;
        values[demo == DemoKind::Card ? "pile_name" : "cup_name"] = params.container;
      }
      break;
    case Skill::InferState:
      if (demo == DemoKind::File) {
        values["file_type"] = file_type_token(params.file_type);
        values["path_name"] = params.container;
      }
      if (demo == DemoKind::Card) values["pile_name"] = params.container;
      if (demo == DemoKind::Chip) values["cup_name"] = params.container;
      break;
    case Skill::CompareState:
      if (demo == DemoKind::File && params.variant == 2) {
        values["cmd"] = render_file_cmd(
            std::get<FileCmdOp>(scenario.ops[static_cast<std::size_t>(params.cmd_index - 1)]));
        values["path_name1"] = params.container;
        values["path_name2"] = params.container2;
      }
      if (demo == DemoKind::Card) values["pile_name"] = params.container;
      if (demo == DemoKind::Chip) {
        values["cup_name"] = params.container;
        values["timestamp1"] = params.timestamp;
      }
      break;
    case Skill::PredictState:
      if (demo == DemoKind::File) {
        values["cmd"] = render_file_cmd(std::get<FileCmdOp>(params.extra_ops.at(0)));
        values["file_type"] = file_type_token(params.file_type);
        values["path_name"] = params.container;
      } else {
        values[demo == DemoKind::Card || demo == DemoKind::Chip ? "actions" : "moves"] =
            render_ops_inline(params.extra_ops);
        if (demo == DemoKind::Card) values["pile_name"] = params.container;
        if (demo == DemoKind::Chip) values["cup_name"] = params.container;
      }
      break;
    case Skill::PredictOperation: {
      const State target =
          apply_sequence(scenario.latent_endpoint(), params.extra_ops).state;
      switch (demo) {
        case DemoKind::Number:
          values["number_arrangement"] = render_number_board(std::get<NumberBoard>(target));
          break;
        case DemoKind::Circle:
          values["board"] = render_circle_board(std::get<CircleGrid>(target));
          break;
        case DemoKind::Cup:
          values["board"] = render_cup_coins(std::get<CupBoard>(target));
          break;
        case DemoKind::File:
          values["path_name"] = params.container;
          values["files"] =
              render_file_names(file_state(target).contents.at(params.container));
          break;
        case DemoKind::Card:
          values["pile_name"] = params.container;
          values["cards"] =
              render_card_list(std::get<CardPiles>(target).piles.at(params.container));
          break;
        case DemoKind::Chip:
          values["cup_name"] = params.container;
          values["chips"] = render_chip_values(
              std::get<ChipCups>(target).cups.at(params.container));
          break;
      }
      break;
    }
  }

  const std::string question =
      substitute(question_template(demo, skill, params.variant), values);
  return instruction + "\n" + question + "\n" + answer_prompt();
}

// ---- parameter sampling --------------------------------------------------------

namespace {

std::vector<std::string> recall_filter_candidates(const Scenario& s) {
  const DemoKind demo = s.config.demo;
  std::vector<std::string> all;
  if (demo == DemoKind::File) all = {"", "touch", "rm -rf", "cp", "mv"};
  else all = {"added to", "removed from"};

  std::vector<std::string> eligible, preferred;
  for (const auto& c : all) {
    const std::size_t n = filtered_op_indices(s, c).size();
    if (n >= 1) eligible.push_back(c);
    if (n >= 3) preferred.push_back(c);
  }
  return preferred.empty() ? eligible : preferred;
}

QuestionParams sample_recall_order(const Scenario& s, Rng& rng) {
  QuestionParams p;
  const DemoKind demo = s.config.demo;
  if (demo == DemoKind::File || demo == DemoKind::Card || demo == DemoKind::Chip) {
    const auto candidates = recall_filter_candidates(s);
    p.criterion = rng.pick(candidates);
  }
  const int total = static_cast<int>(filtered_op_indices(s, p.criterion).size());
  const int len = std::min(rng.range(3, 5), total);
  p.start_id = rng.range(1, total - len + 1);
  p.end_id = p.start_id + len - 1;
  return p;
}

QuestionParams sample_recall_count(const Scenario& s, Rng& rng) {
  QuestionParams p;
  const DemoKind demo = s.config.demo;
  switch (demo) {
    case DemoKind::Number:
    case DemoKind::Circle: {
      std::vector<std::string> eligible;
      for (const Direction d :
           {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
        int n = 0;
        for (const auto& op : s.ops)
          if (op_direction(op) == d) ++n;
        if (n >= 1) eligible.push_back(to_string(d));
      }
      p.criterion = rng.pick(eligible);
      break;
    }
    case DemoKind::Cup: {
      std::vector<std::string> eligible;
      for (int row = 0; row < s.config.state_size; ++row) {
        int n = 0;
        for (const auto& op : s.ops) {
          const auto& w = std::get<CupSwapOp>(op);
          if (w.a.row == row || w.b.row == row) ++n;
        }
        if (n >= 1) eligible.push_back(std::to_string(row + 1));
      }
      p.criterion = rng.pick(eligible);
      break;
    }
    case DemoKind::File: {
      std::vector<std::pair<std::string, std::string>> eligible;
      for (const std::string& ct : {"", "touch", "rm -rf", "cp", "mv"})
        for (const std::string& ft : {"", ".txt", ".py", ".csv", ".json"})
          if (!involved_file_names(s, ct, ft).empty()) eligible.emplace_back(ct, ft);
      const auto& choice = eligible[static_cast<std::size_t>(rng.below(eligible.size()))];
      p.criterion = choice.first;
      p.file_type = choice.second;
      break;
    }
    case DemoKind::Card:
    case DemoKind::Chip: {
      std::vector<std::pair<std::string, std::string>> eligible;
      for (const std::string& action : {"added to", "removed from"})
        for (const auto& name : s.container_names()) {
          int n = 0;
          for (const auto& op : s.ops) {
            if (const auto* c = std::get_if<CardActOp>(&op)) {
              if (card_matches(*c, action) && c->pile == name) ++n;
            } else if (const auto* h = std::get_if<ChipActOp>(&op)) {
              if (chip_matches(*h, action) && h->cup == name) ++n;
            }
          }
          if (n >= 1) eligible.emplace_back(action, name);
        }
      const auto& choice = eligible[static_cast<std::size_t>(rng.below(eligible.size()))];
      p.criterion = choice.first;
      p.container = choice.second;
      break;
    }
  }
  return p;
}

std::string sample_file_type_for(const std::vector<std::string>& names, Rng& rng) {
  std::vector<std::string> candidates = {""};
  for (const std::string& ext : {".txt", ".py", ".csv", ".json"})
    if (!file_names_with_ext(names, ext).empty()) candidates.push_back(ext);
  return rng.pick(candidates);
}

QuestionParams sample_infer_state(const Scenario& s, Rng& rng) {
  QuestionParams p;
  p.timestamp = s.latent_timestamp();
  const DemoKind demo = s.config.demo;
  if (demo == DemoKind::File) {
    p.container = rng.pick(s.container_names());
    p.file_type =
        sample_file_type_for(file_state(s.latent_endpoint()).contents.at(p.container), rng);
  } else if (demo == DemoKind::Card || demo == DemoKind::Chip) {
    p.container = rng.pick(s.container_names());
  }
  return p;
}

QuestionParams sample_compare_state(const Scenario& s, Rng& rng) {
  QuestionParams p;
  const DemoKind demo = s.config.demo;
  p.timestamp = s.latent_timestamp();
  p.timestamp2 = s.revealed_timestamp();
  if (demo == DemoKind::File) {
    const int variants = static_cast<int>(s.container_names().size()) == 2 ? 3 : 2;
    p.variant = static_cast<int>(rng.below(static_cast<std::uint64_t>(variants)));
    if (p.variant == 2) {
      p.cmd_index = rng.range(1, s.config.op_count);
      const bool forward = rng.chance_half();
      p.container = forward ? "path0" : "path1";
      p.container2 = forward ? "path1" : "path0";
    }
  } else if (demo == DemoKind::Card) {
    p.container = rng.pick(s.container_names());
  } else if (demo == DemoKind::Chip) {
    p.container = rng.pick(s.container_names());
    p.timestamp = "start";
    p.timestamp2 = "end";
  }
  return p;
}

QuestionParams sample_predict_state(const Scenario& s, Rng& rng) {
  QuestionParams p;
  p.timestamp = s.latent_timestamp();
  const DemoKind demo = s.config.demo;
  const State& anchor = s.latent_endpoint();
  if (demo == DemoKind::File) {
    OpSampler sampler = scenario_sampler(s);
    p.extra_ops = {sampler.sample(anchor, std::nullopt, rng)};
    const auto& cmd = std::get<FileCmdOp>(p.extra_ops[0]);
    p.container = (cmd.kind == FileCmdKind::Touch || cmd.kind == FileCmdKind::Rm)
                      ? cmd.path
                      : cmd.dst_path;
    const State after = apply_op(anchor, p.extra_ops[0]);
    p.file_type = sample_file_type_for(file_state(after).contents.at(p.container), rng);
  } else {
    p.extra_ops = sample_op_chain(s, anchor, rng.range(3, 5), rng);
    if (demo == DemoKind::Card || demo == DemoKind::Chip)
      p.container = rng.pick(s.container_names());
  }
  return p;
}

QuestionParams sample_predict_operation(const Scenario& s, Rng& rng) {
  QuestionParams p;
  p.timestamp = s.latent_timestamp();
  const DemoKind demo = s.config.demo;
  const State& anchor = s.latent_endpoint();

  if (demo == DemoKind::File) {
    p.container = rng.pick(s.container_names());
    const auto& files = file_state(anchor).contents.at(p.container);
    std::vector<std::string> fresh;
    for (char c = 'a'; c <= 'z'; ++c)
      for (const std::string& ext : {".txt", ".py", ".csv", ".json"}) {
        const std::string name = std::string(1, c) + ext;
        if (std::find(files.begin(), files.end(), name) == files.end())
          fresh.push_back(name);
      }
    rng.shuffle(fresh);
    auto existing = files;
    rng.shuffle(existing);
    const int adds = fresh.empty() ? 0 : std::min<int>(rng.range(1, 3), static_cast<int>(fresh.size()));
    const int removals =
        existing.empty() ? 0 : std::min<int>(rng.range(1, 3), static_cast<int>(existing.size()));
    if (adds == 0 && removals == 0)
      throw std::runtime_error("file predict-operation target is unreachable");
    if (adds > 0) {
      FileCmdOp touch;
      touch.kind = FileCmdKind::Touch;
      touch.path = p.container;
      touch.names.assign(fresh.begin(), fresh.begin() + adds);
      p.extra_ops.push_back(touch);
    }
    if (removals > 0) {
      FileCmdOp rm;
      rm.kind = FileCmdKind::Rm;
      rm.path = p.container;
      rm.names.assign(existing.begin(), existing.begin() + removals);
      p.extra_ops.push_back(rm);
    }
    return p;
  }

  if (demo == DemoKind::Card || demo == DemoKind::Chip)
    p.container = rng.pick(s.container_names());

  for (int attempt = 0; attempt < 128; ++attempt) {
    std::vector<Operation> ops;
    if (demo == DemoKind::Card) {
      OpSampler sampler = scenario_sampler(s);
      State current = anchor;
      const int k = rng.range(2, 4);
      for (int i = 0; i < k; ++i) {
        // keep the witness on the queried pile so the target stays relevant
        Operation op;
        for (int tries = 0;; ++tries) {
          std::optional<State> prev;
          op = sampler.sample(current, prev, rng);
          const auto& act = std::get<CardActOp>(op);
          if (act.pile == p.container) break;
          if (tries > 64) {
            auto forced = std::get<CardActOp>(op);
            forced.pile = p.container;
            if (validate_op(current, forced).ok()) {
              op = forced;
              break;
            }
          }
        }
        current = apply_op(current, op);
        ops.push_back(op);
      }
    } else if (demo == DemoKind::Chip) {
      State current = anchor;
      const int k = rng.range(2, 4);
      for (int i = 0; i < k; ++i) {
        const auto& cups = std::get<ChipCups>(current);
        const bool can_remove = !cups.cups.at(p.container).empty();
        ChipActOp op;
        op.cup = p.container;
        op.add = !can_remove || rng.chance_half();
        if (op.add) {
          op.value = chip_denominations[static_cast<std::size_t>(rng.below(5))];
        } else {
          const auto& cup = cups.cups.at(p.container);
          op.value = cup[static_cast<std::size_t>(rng.below(cup.size()))];
        }
        current = apply_op(current, op);
        ops.push_back(op);
      }
    } else {
      ops = sample_op_chain(s, anchor, rng.range(2, 4), rng);
    }
    const State target = apply_sequence(anchor, ops).state;
    if (!states_match_in_scope(demo, p.container, target, anchor)) {
      p.extra_ops = std::move(ops);
      return p;
    }
  }
  throw std::runtime_error("could not sample a state-changing witness");
}

} // namespace

QuestionParams sample_question_params(const Scenario& scenario, Skill skill, Rng& rng) {
  switch (skill) {
    case Skill::RecallOrder: return sample_recall_order(scenario, rng);
    case Skill::RecallCount: return sample_recall_count(scenario, rng);
    case Skill::InferState: return sample_infer_state(scenario, rng);
    case Skill::CompareState: return sample_compare_state(scenario, rng);
    case Skill::PredictState: return sample_predict_state(scenario, rng);
    case Skill::PredictOperation: return sample_predict_operation(scenario, rng);
  }
  throw std::logic_error("bad skill");
}

// ---- ground truth ---------------------------------------------------------------

namespace {

GroundTruth recall_order_truth(const Scenario& s, const QuestionParams& p) {
  GroundTruth t;
  const DemoKind demo = s.config.demo;
  const auto indices = filtered_op_indices(s, p.criterion);
  std::vector<std::string> items, lines;
  for (int k = p.start_id; k <= p.end_id; ++k) {
    const std::size_t op_idx = indices[static_cast<std::size_t>(k - 1)];
    const Operation& op = s.ops[op_idx];
    const State& before = s.states[op_idx];
    switch (demo) {
      case DemoKind::Number: {
        const auto& b = std::get<NumberBoard>(before);
        const std::string coord = number_coord(slide_source(b, std::get<SlideOp>(op).dir));
        const std::string dir = to_string(std::get<SlideOp>(op).dir);
        items.push_back(coord + " " + dir);
        lines.push_back(ordinal(k) + ": " + coord + ", " + dir);
        break;
      }
      case DemoKind::Circle: {
        const std::string dir = to_string(std::get<CircleMoveOp>(op).dir);
        items.push_back(dir);
        lines.push_back(dir);
        break;
      }
      case DemoKind::Cup: {
        const auto& w = std::get<CupSwapOp>(op);
        std::string a = cup_coord(w.a), b = cup_coord(w.b);
        std::string lo = a, hi = b;
        if (hi < lo) std::swap(lo, hi);
        items.push_back("(" + lo + ", " + hi + ")");
        lines.push_back(ordinal(k) + ": (" + a + ", " + b + ")");
        break;
      }
      case DemoKind::File: {
        const auto& cmd = std::get<FileCmdOp>(op);
        items.push_back(canonical_file_cmd(cmd));
        lines.push_back(ordinal(k) + ": " + render_file_cmd(cmd));
        break;
      }
      case DemoKind::Card: {
        const auto& act = std::get<CardActOp>(op);
        items.push_back(to_string(act.card) + ", " + act.pile);
        lines.push_back(ordinal(k) + ": " + to_string(act.card) + ", " + act.pile);
        break;
      }
      case DemoKind::Chip: {
        const auto& act = std::get<ChipActOp>(op);
        items.push_back(std::to_string(act.value) + ", " + act.cup);
        lines.push_back(ordinal(k) + ": " + std::to_string(act.value) + ", " + act.cup);
        break;
      }
    }
  }
  t.canonical = CanonicalAnswer::item_seq(items);
  t.rendered = demo == DemoKind::Circle ? join(lines, ", ")
               : demo == DemoKind::Cup  ? join(lines, ", ")
                                        : join(lines, "\n");
  return t;
}

GroundTruth recall_count_truth(const Scenario& s, const QuestionParams& p) {
  GroundTruth t;
  const DemoKind demo = s.config.demo;
  std::vector<std::string> items;
  std::string rendered_items;
  std::string unit = "times";

  switch (demo) {
    case DemoKind::Number: {
      const Direction d = direction_from_string(p.criterion);
      for (std::size_t i = 0; i < s.ops.size(); ++i)
        if (std::get<SlideOp>(s.ops[i]).dir == d)
          items.push_back(
              number_coord(slide_source(std::get<NumberBoard>(s.states[i]), d)));
      rendered_items = join(items, ", ");
      break;
    }
    case DemoKind::Circle: {
      const Direction d = direction_from_string(p.criterion);
      for (std::size_t i = 0; i < s.ops.size(); ++i)
        if (std::get<CircleMoveOp>(s.ops[i]).dir == d)
          items.push_back(circle_coord(std::get<CircleGrid>(s.states[i]).circle));
      rendered_items = join(items, ", ");
      break;
    }
    case DemoKind::Cup: {
      const int row = std::stoi(p.criterion) - 1;
      std::vector<std::string> lines;
      int k = 0;
      for (const auto& op : s.ops) {
        const auto& w = std::get<CupSwapOp>(op);
        const bool in_a = w.a.row == row, in_b = w.b.row == row;
        if (!in_a && !in_b) continue;
        ++k;
        if (in_a && in_b) {
          std::string lo = cup_coord(w.a), hi = cup_coord(w.b);
          if (hi < lo) std::swap(lo, hi);
          items.push_back("(" + lo + "," + hi + ")");
          lines.push_back(ordinal(k) + ": (" + lo + "," + hi + ")");
        } else {
          const std::string c = cup_coord(in_a ? w.a : w.b);
          items.push_back(c);
          lines.push_back(ordinal(k) + ": " + c);
        }
      }
      rendered_items = join(lines, ", ");
      break;
    }
    case DemoKind::File: {
      items = involved_file_names(s, p.criterion, p.file_type);
      std::sort(items.begin(), items.end());
      rendered_items = join(items, ", ");
      unit = file_type_token(p.file_type) + "files";
      break;
    }
    case DemoKind::Card: {
      for (const auto& op : s.ops) {
        const auto& act = std::get<CardActOp>(op);
        if (card_matches(act, p.criterion) && act.pile == p.container)
          items.push_back(to_string(act.card));
      }
      rendered_items = join(items, ", ");
      unit = "cards";
      break;
    }
    case DemoKind::Chip: {
      for (const auto& op : s.ops) {
        const auto& act = std::get<ChipActOp>(op);
        if (chip_matches(act, p.criterion) && act.cup == p.container)
          items.push_back(std::to_string(act.value));
      }
      rendered_items = join(items, ", ");
      unit = "chips";
      break;
    }
  }

  t.canonical = CanonicalAnswer::counted(static_cast<int>(items.size()), items);
  t.rendered = std::to_string(items.size()) + " " + unit;
  if (!items.empty()) t.rendered += ": " + rendered_items;
  return t;
}

CanonicalAnswer state_answer(const Scenario& s, const State& state,
                             const QuestionParams& p, std::string* rendered) {
  switch (s.config.demo) {
    case DemoKind::Number: {
      const auto& b = std::get<NumberBoard>(state);
      std::map<std::string, std::string> cells;
      for (int r = 0; r < b.size; ++r)
        for (int c = 0; c < b.size; ++c)
          cells[number_coord({r, c})] = std::to_string(b.at({r, c}));
      *rendered = render_number_board(b);
      return CanonicalAnswer::cell_map(std::move(cells));
    }
    case DemoKind::Circle: {
      const auto& g = std::get<CircleGrid>(state);
      std::map<std::string, std::string> cells;
      for (int r = 0; r < g.size; ++r)
        for (int c = 0; c < g.size; ++c)
          cells[circle_coord({r, c})] = to_string(g.at({r, c}));
      *rendered = render_circle_board(g);
      return CanonicalAnswer::cell_map(std::move(cells));
    }
    case DemoKind::Cup: {
      const auto& b = std::get<CupBoard>(state);
      std::set<std::string> coords;
      for (const Coord& c : b.coins) coords.insert(cup_coord(c));
      *rendered = render_cup_coins(b);
      if (coords.empty()) *rendered = "none";
      return CanonicalAnswer::str_set(std::move(coords));
    }
    case DemoKind::File: {
      auto names =
          file_names_with_ext(file_state(state).contents.at(p.container), p.file_type);
      std::sort(names.begin(), names.end());
      *rendered =
          std::to_string(names.size()) + " " + file_type_token(p.file_type) + "files";
      if (!names.empty()) *rendered += ": " + join(names, ", ");
      return CanonicalAnswer::counted(static_cast<int>(names.size()), names);
    }
    case DemoKind::Card: {
      const auto& pile = std::get<CardPiles>(state).piles.at(p.container);
      std::vector<std::string> cards;
      for (const Card& c : pile) cards.push_back(to_string(c));
      *rendered = cards.empty() ? "none" : join(cards, ", ");
      return CanonicalAnswer::item_seq(std::move(cards));
    }
    case DemoKind::Chip: {
      const auto& cup = std::get<ChipCups>(state).cups.at(p.container);
      std::vector<std::string> values;
      for (const int v : cup) values.push_back(std::to_string(v));
      *rendered = std::to_string(values.size()) + " chips";
      if (!values.empty()) *rendered += ": " + join(values, ", ");
      return CanonicalAnswer::counted(static_cast<int>(values.size()), values);
    }
  }
  throw std::logic_error("bad demo kind");
}

GroundTruth compare_state_truth(const Scenario& s, const QuestionParams& p) {
  GroundTruth t;
  const DemoKind demo = s.config.demo;
  const State& latent = s.latent_endpoint();

  switch (demo) {
    case DemoKind::Number:
    case DemoKind::Circle:
    case DemoKind::Cup: {
      const StateDiff diff = diff_states(s.initial(), s.final());
      const bool latent_is_end = s.config.reveal == Reveal::Begin;
      std::map<std::string, std::string> cells;
      std::vector<std::string> parts;
      for (const auto& cell : diff.cells) {
        const std::string value = latent_is_end ? cell.second : cell.first;
        std::string key;
        if (demo == DemoKind::Number) key = number_coord(cell.coord);
        else if (demo == DemoKind::Circle) key = circle_coord(cell.coord);
        else key = cup_coord(cell.coord);
        cells[key] = value;
      }
      for (const auto& [key, value] : cells) parts.push_back(key + ": " + value);
      t.canonical = CanonicalAnswer::cell_map(std::move(cells));
      t.rendered = parts.empty() ? "none" : join(parts, ", ");
      return t;
    }
    case DemoKind::File: {
      std::set<std::string> result;
      if (p.variant == 2) {
        const auto& after = file_state(s.states[static_cast<std::size_t>(p.cmd_index)]);
        for (const auto& n : after.contents.at(p.container))
          if (!after.has_file(p.container2, n)) result.insert(n);
      } else {
        const auto& start = file_state(s.initial());
        const auto& end = file_state(s.final());
        const auto& from = p.variant == 0 ? start : end;
        const auto& to = p.variant == 0 ? end : start;
        for (const auto& n : from.contents.at("path0"))
          if (!to.has_file("path0", n)) result.insert(n);
      }
      t.rendered = result.empty()
                       ? "none"
                       : join(std::vector<std::string>(result.begin(), result.end()), ", ");
      t.canonical = CanonicalAnswer::str_set(std::move(result));
      return t;
    }
    case DemoKind::Card: {
      const State& revealed =
          s.config.reveal == Reveal::Begin ? s.initial() : s.final();
      const auto& at_t1 = std::get<CardPiles>(latent).piles.at(p.container);
      const auto& at_t2 = std::get<CardPiles>(revealed).piles.at(p.container);
      std::set<std::string> result;
      std::vector<std::string> ordered;
      for (const Card& c : at_t1)
        if (std::find(at_t2.begin(), at_t2.end(), c) == at_t2.end()) {
          result.insert(to_string(c));
          ordered.push_back(to_string(c));
        }
      t.rendered = ordered.empty() ? "none" : join(ordered, ", ");
      t.canonical = CanonicalAnswer::str_set(std::move(result));
      return t;
    }
    case DemoKind::Chip: {
      const auto& start = std::get<ChipCups>(s.initial());
      const auto& end = std::get<ChipCups>(s.final());
      const int t1 = start.total(p.container);
      const int t2 = end.total(p.container);
      std::string endpoint = "equal";
      if (t1 > t2) endpoint = "start";
      else if (t2 > t1) endpoint = "end";
      const int diff = t1 > t2 ? t1 - t2 : t2 - t1;
      t.canonical = CanonicalAnswer::chip_compare(endpoint, diff);
      t.rendered = endpoint + ", " + std::to_string(diff);
      return t;
    }
  }
  throw std::logic_error("bad demo kind");
}

} // namespace

GroundTruth derive_ground_truth(const Scenario& scenario, Skill skill,
                                const QuestionParams& params) {
  switch (skill) {
    case Skill::RecallOrder: return recall_order_truth(scenario, params);
    case Skill::RecallCount: return recall_count_truth(scenario, params);
    case Skill::InferState: {
      GroundTruth t;
      t.canonical =
          state_answer(scenario, scenario.latent_endpoint(), params, &t.rendered);
      return t;
    }
    case Skill::CompareState: return compare_state_truth(scenario, params);
    case Skill::PredictState: {
      GroundTruth t;
      const State result =
          apply_sequence(scenario.latent_endpoint(), params.extra_ops).state;
      t.canonical = state_answer(scenario, result, params, &t.rendered);
      return t;
    }
    case Skill::PredictOperation: {
      GroundTruth t;
      t.target = apply_sequence(scenario.latent_endpoint(), params.extra_ops).state;
      t.witness_ops = params.extra_ops;
      t.witness_text = render_ops_inline(params.extra_ops);
      return t;
    }
  }
  throw std::logic_error("bad skill");
}

std::vector<QuestionItem> generate_question_set(const Scenario& scenario) {
  std::vector<QuestionItem> items;
  for (std::size_t i = 0; i < all_skills.size(); ++i) {
    const Skill skill = all_skills[i];
    Rng rng(substream_seed(scenario.config.seed, kStreamQuestionBase + i));
    QuestionItem q;
    q.scenario_id = scenario.id;
    q.skill = skill;
    q.params = sample_question_params(scenario, skill, rng);
    q.prompt = build_prompt(scenario, skill, q.params);
    q.truth = derive_ground_truth(scenario, skill, q.params);
    Json body = question_to_json(q);
    body.erase("id");
    q.id = hex64(fnv1a64(body.dump()));
    items.push_back(std::move(q));
  }
  return items;
}

// ---- serialization ---------------------------------------------------------------

Json canonical_answer_to_json(const CanonicalAnswer& a) {
  Json j;
  switch (a.kind) {
    case CanonicalAnswer::Kind::CellMap: {
      j["kind"] = "cell_map";
      Json cells = Json::object();
      for (const auto& [k, v] : a.cells) cells[k] = v;
      j["cells"] = std::move(cells);
      break;
    }
    case CanonicalAnswer::Kind::StrSet: {
      j["kind"] = "str_set";
      j["items"] = std::vector<std::string>(a.set_items.begin(), a.set_items.end());
      break;
    }
    case CanonicalAnswer::Kind::ItemSeq:
      j["kind"] = "item_seq";
      j["items"] = a.seq_items;
      break;
    case CanonicalAnswer::Kind::CountedItems:
      j["kind"] = "counted";
      j["count"] = a.count;
      j["items"] = a.counted_items;
      break;
    case CanonicalAnswer::Kind::ChipCompare:
      j["kind"] = "chip_compare";
      j["endpoint"] = a.endpoint;
      j["difference"] = a.difference;
      break;
  }
  return j;
}

CanonicalAnswer canonical_answer_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cell_map") {
    std::map<std::string, std::string> cells;
    for (const auto& [k, v] : j.at("cells").items()) cells[k] = v.get<std::string>();
    return CanonicalAnswer::cell_map(std::move(cells));
  }
  if (kind == "str_set") {
    const auto items = j.at("items").get<std::vector<std::string>>();
    return CanonicalAnswer::str_set({items.begin(), items.end()});
  }
  if (kind == "item_seq")
    return CanonicalAnswer::item_seq(j.at("items").get<std::vector<std::string>>());
  if (kind == "counted")
    return CanonicalAnswer::counted(j.at("count").get<int>(),
                                    j.at("items").get<std::vector<std::string>>());
  if (kind == "chip_compare")
    return CanonicalAnswer::chip_compare(j.at("endpoint").get<std::string>(),
                                         j.at("difference").get<int>());
  throw std::invalid_argument("bad canonical answer kind: " + kind);
}

Json question_to_json(const QuestionItem& q) {
  Json j;
  j["id"] = q.id;
  j["scenario_id"] = q.scenario_id;
  j["skill"] = to_string(q.skill);
  j["prompt"] = q.prompt;

  Json truth;
  truth["canonical"] = canonical_answer_to_json(q.truth.canonical);
  truth["rendered"] = q.truth.rendered;
  if (q.truth.target) {
    truth["target"] = state_to_json(*q.truth.target);
    Json witness = Json::array();
    for (const auto& op : q.truth.witness_ops) witness.push_back(op_to_json(op));
    truth["witness_ops"] = std::move(witness);
    truth["witness_text"] = q.truth.witness_text;
  }
  j["ground_truth"] = std::move(truth);

  Json params;
  params["start_id"] = q.params.start_id;
  params["end_id"] = q.params.end_id;
  params["criterion"] = q.params.criterion;
  params["file_type"] = q.params.file_type;
  params["container"] = q.params.container;
  params["container2"] = q.params.container2;
  params["variant"] = q.params.variant;
  params["cmd_index"] = q.params.cmd_index;
  params["timestamp"] = q.params.timestamp;
  params["timestamp2"] = q.params.timestamp2;
  Json extra = Json::array();
  for (const auto& op : q.params.extra_ops) extra.push_back(op_to_json(op));
  params["extra_ops"] = std::move(extra);
  j["params"] = std::move(params);
  return j;
}

QuestionItem question_from_json(const Json& j) {
  QuestionItem q;
  q.id = j.at("id").get<std::string>();
  q.scenario_id = j.at("scenario_id").get<std::string>();
  q.skill = skill_from_string(j.at("skill").get<std::string>());
  q.prompt = j.at("prompt").get<std::string>();

  const auto& truth = j.at("ground_truth");
  q.truth.canonical = canonical_answer_from_json(truth.at("canonical"));
  q.truth.rendered = truth.at("rendered").get<std::string>();
  if (truth.contains("target")) {
    q.truth.target = state_from_json(truth.at("target"));
    for (const auto& op : truth.at("witness_ops"))
      q.truth.witness_ops.push_back(op_from_json(op));
    q.truth.witness_text = truth.at("witness_text").get<std::string>();
  }

  const auto& params = j.at("params");
  q.params.start_id = params.at("start_id").get<int>();
  q.params.end_id = params.at("end_id").get<int>();
  q.params.criterion = params.at("criterion").get<std::string>();
  q.params.file_type = params.at("file_type").get<std::string>();
  q.params.container = params.at("container").get<std::string>();
  q.params.container2 = params.at("container2").get<std::string>();
  q.params.variant = params.at("variant").get<int>();
  q.params.cmd_index = params.at("cmd_index").get<int>();
  q.params.timestamp = params.at("timestamp").get<std::string>();
  q.params.timestamp2 = params.at("timestamp2").get<std::string>();
  for (const auto& op : params.at("extra_ops"))
    q.params.extra_ops.push_back(op_from_json(op));
  return q;
}

} // namespace lsb
