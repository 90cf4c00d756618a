#include "lsbench/scenario.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lsbench/sim.hpp"

namespace lsb {

namespace {

constexpr std::uint64_t kStreamInit = 0;
constexpr std::uint64_t kStreamOpCount = 2;

const std::vector<std::string>& file_extensions() {
  static const std::vector<std::string> exts = {".txt", ".py", ".csv", ".json"};
  return exts;
}

std::vector<std::string> file_name_universe() {
  std::vector<std::string> names;
  for (char c = 'a'; c <= 'z'; ++c)
    for (const auto& ext : file_extensions()) names.push_back(std::string(1, c) + ext);
  return names;
}

std::vector<Card> full_deck() {
  std::vector<Card> deck;
  for (const Suit s : {Suit::Hearts, Suit::Diamonds, Suit::Clubs, Suit::Spades})
    for (int v = 1; v <= 13; ++v) deck.push_back({v, s});
  return deck;
}

std::vector<std::string> container_labels(DemoKind demo, int count) {
  std::string stem;
  switch (demo) {
    case DemoKind::File: stem = "path"; break;
    case DemoKind::Card: stem = "pile"; break;
    case DemoKind::Chip: stem = "cup"; break;
    default: throw std::logic_error("not a container demo");
  }
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k, Rng& rng) {
  rng.shuffle(pool);
  pool.resize(k);
  return pool;
}

State random_initial_state(const ScenarioConfig& config, Rng& rng) {
  const int n = config.state_size;
  switch (config.demo) {
    case DemoKind::Number: {
      NumberBoard b;
      b.size = n;
      b.cells.resize(static_cast<std::size_t>(n * n));
      for (int i = 0; i < n * n; ++i) b.cells[static_cast<std::size_t>(i)] = i;
      rng.shuffle(b.cells);
      return b;
    }
    case DemoKind::Circle: {
      CircleGrid g;
      g.size = n;
      for (int i = 0; i < n * n; ++i)
        g.colors.push_back(rng.chance_half() ? PieceColor::Black : PieceColor::White);
      g.circle = {rng.range(0, n - 1), rng.range(0, n - 1)};
      return g;
    }
    case DemoKind::Cup: {
      CupBoard b;
      b.size = n;
      const int cells = n * n;
      const int lo = (cells + 3) / 4;
      const int hi = cells / 2;
      const int coins = rng.range(lo, hi);
      std::vector<Coord> all;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) all.push_back({r, c});
      for (const Coord& c :
           sample_without_replacement(all, static_cast<std::size_t>(coins), rng))
        b.coins.insert(c);
      return b;
    }
    case DemoKind::File: {
      FileSystemState f;
      f.paths = container_labels(DemoKind::File, n);
      for (const auto& p : f.paths) {
        const int files = rng.range(8, 12);
        f.contents[p] = sample_without_replacement(file_name_universe(),
                                                   static_cast<std::size_t>(files), rng);
      }
      return f;
    }
    case DemoKind::Card: {
      CardPiles piles;
      piles.pile_names = container_labels(DemoKind::Card, n);
      std::vector<Card> deck = full_deck();
      rng.shuffle(deck);
      std::size_t cursor = 0;
      for (const auto& name : piles.pile_names) {
        const int cards = rng.range(4, 6);
        std::vector<Card> pile;
        for (int i = 0; i < cards; ++i) pile.push_back(deck[cursor++]);
        piles.piles[name] = std::move(pile);
      }
      return piles;
    }
    case DemoKind::Chip: {
      ChipCups cups;
      cups.cup_names = container_labels(DemoKind::Chip, n);
      for (const auto& name : cups.cup_names) {
        const int chips = rng.range(2, 5);
        std::vector<int> cup;
        for (int i = 0; i < chips; ++i)
          cup.push_back(chip_denominations[static_cast<std::size_t>(rng.below(5))]);
        cups.cups[name] = std::move(cup);
      }
      return cups;
    }
  }
  throw std::logic_error("bad demo kind");
}

Operation sample_file_op(const FileSystemState& fs, Rng& rng) {
  const auto universe = file_name_universe();
  std::vector<FileCmdKind> feasible;

  std::vector<std::string> touchable, removable;
  for (const auto& p : fs.paths) {
    if (fs.contents.at(p).size() < universe.size()) touchable.push_back(p);
    if (!fs.contents.at(p).empty()) removable.push_back(p);
  }
  if (!touchable.empty()) feasible.push_back(FileCmdKind::Touch);
  if (!removable.empty()) feasible.push_back(FileCmdKind::Rm);

  std::vector<std::pair<std::string, std::string>> move_pairs;
  if (fs.paths.size() >= 2) {
    for (const auto& src : fs.paths)
      for (const auto& dst : fs.paths) {
        if (src == dst) continue;
        for (const auto& name : fs.contents.at(src))
          if (!fs.has_file(dst, name)) {
            move_pairs.emplace_back(src, dst);
            break;
          }
      }
    if (!move_pairs.empty()) {
      feasible.push_back(FileCmdKind::Cp);
      feasible.push_back(FileCmdKind::Mv);
    }
  }
  if (feasible.empty()) throw std::runtime_error("no valid file op exists");

  FileCmdOp op;
  op.kind = rng.pick(feasible);
  if (op.kind == FileCmdKind::Touch) {
    op.path = rng.pick(touchable);
    std::vector<std::string> fresh;
    for (const auto& n : universe)
      if (!fs.has_file(op.path, n)) fresh.push_back(n);
    const int k = std::min<int>(rng.range(2, 5), static_cast<int>(fresh.size()));
    op.names = sample_without_replacement(fresh, static_cast<std::size_t>(k), rng);
  } else if (op.kind == FileCmdKind::Rm) {
    op.path = rng.pick(removable);
    const auto& files = fs.contents.at(op.path);
    const int k = std::min<int>(rng.range(1, 4), static_cast<int>(files.size()));
    op.names = sample_without_replacement(files, static_cast<std::size_t>(k), rng);
  } else {
    const auto& pair = rng.pick(move_pairs);
    op.src_path = pair.first;
    op.dst_path = pair.second;
    std::vector<std::string> candidates;
    for (const auto& n : fs.contents.at(op.src_path))
      if (!fs.has_file(op.dst_path, n)) candidates.push_back(n);
    op.name = rng.pick(candidates);
  }
  return op;
}

} // namespace

void ScenarioConfig::validate() const {
  if (op_count < 1) throw std::invalid_argument("op_count must be >= 1");
  if (is_board_demo(demo)) {
    if (state_size < 3 || state_size > 6)
      throw std::invalid_argument("board size must be 3..6, got " +
                                  std::to_string(state_size));
  } else if (state_size < 1 || state_size > 2) {
    throw std::invalid_argument("container count must be 1..2, got " +
                                std::to_string(state_size));
  }
}

Json config_to_json(const ScenarioConfig& c) {
  Json j;
  j["demo"] = to_string(c.demo);
  j["state_size"] = c.state_size;
  j["op_count"] = c.op_count;
  j["reveal"] = to_string(c.reveal);
  j["seed"] = c.seed;
  return j;
}

ScenarioConfig config_from_json(const Json& j) {
  ScenarioConfig c;
  c.demo = demo_kind_from_string(j.at("demo").get<std::string>());
  c.state_size = j.at("state_size").get<int>();
  c.op_count = j.at("op_count").get<int>();
  c.reveal = reveal_from_string(j.at("reveal").get<std::string>());
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

std::vector<std::string> Scenario::container_names() const {
  if (const auto* f = std::get_if<FileSystemState>(&states.front())) return f->paths;
  if (const auto* p = std::get_if<CardPiles>(&states.front())) return p->pile_names;
  if (const auto* c = std::get_if<ChipCups>(&states.front())) return c->cup_names;
  return {};
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["config"] = config_to_json(s.config);
  Json states = Json::array();
  for (const auto& st : s.states) states.push_back(state_to_json(st));
  j["states"] = std::move(states);
  Json ops = Json::array();
  for (const auto& op : s.ops) ops.push_back(op_to_json(op));
  j["ops"] = std::move(ops);
  j["id"] = s.id;
  return j;
}

Scenario scenario_from_json(const Json& j) {
  Scenario s;
  s.config = config_from_json(j.at("config"));
  for (const auto& st : j.at("states")) s.states.push_back(state_from_json(st));
  for (const auto& op : j.at("ops")) s.ops.push_back(op_from_json(op));
  s.id = j.at("id").get<std::string>();
  return s;
}

std::string scenario_content_id(const Scenario& s) {
  Json j;
  j["config"] = config_to_json(s.config);
  Json states = Json::array();
  for (const auto& st : s.states) states.push_back(state_to_json(st));
  j["states"] = std::move(states);
  Json ops = Json::array();
  for (const auto& op : s.ops) ops.push_back(op_to_json(op));
  j["ops"] = std::move(ops);
  return hex64(fnv1a64(j.dump()));
}

std::vector<Operation> enumerate_valid_ops(const State& state) {
  std::vector<Operation> ops;
  if (const auto* b = std::get_if<NumberBoard>(&state)) {
    for (const Direction d :
         {Direction::Left, Direction::Right, Direction::Up, Direction::Down})
      if (b->in_bounds(slide_source(*b, d))) ops.push_back(SlideOp{d});
  } else if (const auto* g = std::get_if<CircleGrid>(&state)) {
    for (const Direction d :
         {Direction::Left, Direction::Right, Direction::Up, Direction::Down})
      if (g->in_bounds(step(g->circle, d))) ops.push_back(CircleMoveOp{d});
  } else if (const auto* c = std::get_if<CupBoard>(&state)) {
    std::vector<Coord> cells;
    for (int r = 0; r < c->size; ++r)
      for (int col = 0; col < c->size; ++col) cells.push_back({r, col});
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t k = i + 1; k < cells.size(); ++k)
        ops.push_back(CupSwapOp{cells[i], cells[k]});
  } else {
    throw std::invalid_argument("enumerate_valid_ops: only board demos are enumerable");
  }
  return ops;
}

void OpSampler::note_state(const State& state) {
  if (const auto* p = std::get_if<CardPiles>(&state))
    for (const auto& [name, pile] : p->piles)
      for (const Card& c : pile) used_cards_.insert(c);
}

Operation OpSampler::sample_once(const State& state, Rng& rng) {
  if (const auto* b = std::get_if<NumberBoard>(&state)) {
    (void)b;
    return rng.pick(enumerate_valid_ops(state));
  }
  if (const auto* g = std::get_if<CircleGrid>(&state)) {
    (void)g;
    return rng.pick(enumerate_valid_ops(state));
  }
  if (const auto* c = std::get_if<CupBoard>(&state)) {
    const int n = c->size;
    const Coord a{rng.range(0, n - 1), rng.range(0, n - 1)};
    Coord b = a;
    while (b == a) b = {rng.range(0, n - 1), rng.range(0, n - 1)};
    return CupSwapOp{a, b};
  }
  if (const auto* f = std::get_if<FileSystemState>(&state)) return sample_file_op(*f, rng);
  if (const auto* p = std::get_if<CardPiles>(&state)) {
    std::vector<std::string> removable;
    for (const auto& name : p->pile_names)
      if (!p->piles.at(name).empty()) removable.push_back(name);
    std::vector<Card> fresh;
    for (const Card& c : full_deck())
      if (!used_cards_.count(c)) fresh.push_back(c);

    const bool can_add = !fresh.empty();
    const bool can_remove = !removable.empty();
    if (!can_add && !can_remove) throw std::runtime_error("no valid card op exists");
    const bool add = can_add && (!can_remove || rng.chance_half());
    CardActOp op;
    op.add = add;
    if (add) {
      op.card = rng.pick(fresh);
      op.pile = rng.pick(p->pile_names);
    } else {
      op.pile = rng.pick(removable);
      op.card = p->piles.at(op.pile).back();
    }
    return op;
  }
  const auto& cups = std::get<ChipCups>(state);
  std::vector<std::string> removable;
  for (const auto& name : cups.cup_names)
    if (!cups.cups.at(name).empty()) removable.push_back(name);
  const bool add = removable.empty() || rng.chance_half();
  ChipActOp op;
  op.add = add;
  if (add) {
    op.value = chip_denominations[static_cast<std::size_t>(rng.below(5))];
    op.cup = rng.pick(cups.cup_names);
  } else {
    op.cup = rng.pick(removable);
    const auto& cup = cups.cups.at(op.cup);
    op.value = cup[static_cast<std::size_t>(rng.below(cup.size()))];
  }
  return op;
}

Operation OpSampler::sample(const State& state, const std::optional<State>& previous,
                            Rng& rng) {
  Operation op = sample_once(state, rng);
  // Immediate-undo rejection: one resample when the draw would exactly
  // restore the predecessor state; the second draw stands either way.
  if (previous && apply_op(state, op) == *previous) op = sample_once(state, rng);
  if (const auto* act = std::get_if<CardActOp>(&op))
    if (act->add) used_cards_.insert(act->card);
  return op;
}

Operation sample_valid_op(const State& state, const std::optional<State>& previous,
                          Rng& rng) {
  OpSampler sampler;
  sampler.note_state(state);
  return sampler.sample(state, previous, rng);
}

Scenario generate_scenario(const ScenarioConfig& config) {
  config.validate();
  Scenario s;
  s.config = config;

  Rng rng(substream_seed(config.seed, kStreamInit));
  s.states.push_back(random_initial_state(config, rng));

  OpSampler sampler;
  sampler.note_state(s.states.front());
  for (int t = 0; t < config.op_count; ++t) {
    std::optional<State> previous;
    if (t > 0) previous = s.states[static_cast<std::size_t>(t - 1)];
    const Operation op = sampler.sample(s.states.back(), previous, rng);
    s.states.push_back(apply_op(s.states.back(), op));
    s.ops.push_back(op);
  }
  s.id = scenario_content_id(s);
  return s;
}

int BenchmarkSpec::total_videos() const {
  int total = 0;
  for (const auto& slot : slots) total += slot.count;
  return total;
}

void BenchmarkSpec::validate() const {
  if (slots.empty()) throw std::invalid_argument("spec has no slots");
  if (questions_per_video != 6)
    throw std::invalid_argument("questions_per_video must be 6 (one per skill)");
  std::set<std::pair<int, int>> ranges;
  for (const auto& slot : slots) {
    if (slot.count < 0) throw std::invalid_argument("negative slot count");
    if (slot.op_min < 1 || slot.op_max < slot.op_min)
      throw std::invalid_argument("bad op bucket");
    if (slot.reveal != "begin" && slot.reveal != "end" && slot.reveal != "split")
      throw std::invalid_argument("bad reveal value: " + slot.reveal);
    ScenarioConfig probe{slot.demo, slot.state_size, slot.op_min, Reveal::Begin, 0};
    probe.validate();
    ranges.insert({slot.op_min, slot.op_max});
  }
  // distinct buckets must not overlap, otherwise balance counts are ambiguous
  std::vector<std::pair<int, int>> sorted(ranges.begin(), ranges.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].first <= sorted[i - 1].second)
      throw std::invalid_argument("op buckets overlap");
}

BenchmarkSpec default_benchmark_spec(std::uint64_t master_seed) {
  BenchmarkSpec spec;
  spec.master_seed = master_seed;
  for (const DemoKind demo : all_demo_kinds) {
    const std::vector<int> sizes = is_board_demo(demo) ? std::vector<int>{3, 4}
                                                       : std::vector<int>{1, 2};
    for (const int size : sizes)
      for (const auto& [lo, hi] : {std::pair{5, 9}, std::pair{10, 14}})
        spec.slots.push_back({demo, size, lo, hi, "split", 10});
  }
  return spec;
}

Json spec_to_json(const BenchmarkSpec& spec) {
  Json j;
  j["master_seed"] = spec.master_seed;
  j["questions_per_video"] = spec.questions_per_video;
  Json slots = Json::array();
  for (const auto& s : spec.slots) {
    Json slot;
    slot["demo"] = to_string(s.demo);
    slot["state_size"] = s.state_size;
    slot["op_bucket"] = Json::array({s.op_min, s.op_max});
    slot["reveal"] = s.reveal;
    slot["count"] = s.count;
    slots.push_back(std::move(slot));
  }
  j["slots"] = std::move(slots);
  return j;
}

BenchmarkSpec spec_from_json(const Json& j) {
  BenchmarkSpec spec;
  spec.master_seed = j.value("master_seed", std::uint64_t{0});
  spec.questions_per_video = j.value("questions_per_video", 6);
  for (const auto& s : j.at("slots")) {
    SlotSpec slot;
    slot.demo = demo_kind_from_string(s.at("demo").get<std::string>());
    slot.state_size = s.at("state_size").get<int>();
    slot.op_min = s.at("op_bucket").at(0).get<int>();
    slot.op_max = s.at("op_bucket").at(1).get<int>();
    slot.reveal = s.value("reveal", std::string("split"));
    slot.count = s.at("count").get<int>();
    spec.slots.push_back(std::move(slot));
  }
  return spec;
}

std::string op_bucket_label(const BenchmarkSpec& spec, int op_count) {
  for (const auto& slot : spec.slots)
    if (op_count >= slot.op_min && op_count <= slot.op_max)
      return std::to_string(slot.op_min) + "-" + std::to_string(slot.op_max);
  return "other";
}

std::string size_variant_label(DemoKind demo, int state_size) {
  if (is_board_demo(demo)) {
    if (state_size == 3) return "1&3x3";
    if (state_size == 4) return "2&4x4";
  } else {
    if (state_size == 1) return "1&3x3";
    if (state_size == 2) return "2&4x4";
  }
  return "other";
}

std::vector<Scenario> generate_benchmark_scenarios(const BenchmarkSpec& spec) {
  spec.validate();
  std::vector<ScenarioConfig> configs;
  std::uint64_t slot_index = 0;
  for (const auto& slot : spec.slots) {
    for (int i = 0; i < slot.count; ++i, ++slot_index) {
      ScenarioConfig config;
      config.demo = slot.demo;
      config.state_size = slot.state_size;
      config.seed = substream_seed(spec.master_seed, slot_index);
      const int span = slot.op_max - slot.op_min + 1;
      config.op_count =
          slot.op_min +
          static_cast<int>(substream_seed(config.seed, kStreamOpCount) %
                           static_cast<std::uint64_t>(span));
      if (slot.reveal == "begin") config.reveal = Reveal::Begin;
      else if (slot.reveal == "end") config.reveal = Reveal::End;
      else config.reveal = (i % 2 == 0) ? Reveal::Begin : Reveal::End;
      configs.push_back(config);
    }
  }
  std::vector<Scenario> scenarios;
  scenarios.reserve(configs.size());
  for (const auto& config : configs) scenarios.push_back(generate_scenario(config));
  return scenarios;
}

BalanceSummary summarize(const BenchmarkSpec& spec,
                         const std::vector<ManifestEntry>& entries) {
  BalanceSummary b;
  b.videos = static_cast<int>(entries.size());
  b.questions = b.videos * spec.questions_per_video;
  for (const auto& e : entries) {
    b.per_demo[to_string(e.config.demo)]++;
    b.per_bucket[op_bucket_label(spec, e.config.op_count)]++;
    b.per_size_variant[size_variant_label(e.config.demo, e.config.state_size)]++;
    b.per_reveal[to_string(e.config.reveal)]++;
  }
  for (const Skill s : all_skills) b.per_skill[to_string(s)] = b.videos;
  return b;
}

namespace {

Json counts_to_json(const std::map<std::string, int>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

std::map<std::string, int> counts_from_json(const Json& j) {
  std::map<std::string, int> m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<int>();
  return m;
}

Json manifest_body_json(const Manifest& m) {
  Json j;
  j["spec"] = spec_to_json(m.spec);
  Json entries = Json::array();
  for (const auto& e : m.entries) {
    Json entry;
    entry["id"] = e.id;
    entry["config"] = config_to_json(e.config);
    entry["config_digest"] = e.config_digest;
    entry["script_path"] = e.script_path;
    entry["frames_dir"] = e.frames_dir;
    entry["questions_path"] = e.questions_path;
    entries.push_back(std::move(entry));
  }
  j["scenarios"] = std::move(entries);
  Json summary;
  summary["videos"] = m.summary.videos;
  summary["questions"] = m.summary.questions;
  summary["per_demo"] = counts_to_json(m.summary.per_demo);
  summary["per_skill"] = counts_to_json(m.summary.per_skill);
  summary["per_bucket"] = counts_to_json(m.summary.per_bucket);
  summary["per_size_variant"] = counts_to_json(m.summary.per_size_variant);
  summary["per_reveal"] = counts_to_json(m.summary.per_reveal);
  j["summary"] = std::move(summary);
  return j;
}

} // namespace

std::string manifest_digest(const Manifest& m) {
  return hex64(fnv1a64(manifest_body_json(m).dump()));
}

Json manifest_to_json(const Manifest& m) {
  Json j = manifest_body_json(m);
  j["digest"] = m.digest;
  return j;
}

Manifest manifest_from_json(const Json& j) {
  Manifest m;
  m.spec = spec_from_json(j.at("spec"));
  for (const auto& e : j.at("scenarios")) {
    ManifestEntry entry;
    entry.id = e.at("id").get<std::string>();
    entry.config = config_from_json(e.at("config"));
    entry.config_digest = e.at("config_digest").get<std::string>();
    entry.script_path = e.at("script_path").get<std::string>();
    entry.frames_dir = e.at("frames_dir").get<std::string>();
    entry.questions_path = e.at("questions_path").get<std::string>();
    m.entries.push_back(std::move(entry));
  }
  const auto& s = j.at("summary");
  m.summary.videos = s.at("videos").get<int>();
  m.summary.questions = s.at("questions").get<int>();
  m.summary.per_demo = counts_from_json(s.at("per_demo"));
  m.summary.per_skill = counts_from_json(s.at("per_skill"));
  m.summary.per_bucket = counts_from_json(s.at("per_bucket"));
  m.summary.per_size_variant = counts_from_json(s.at("per_size_variant"));
  m.summary.per_reveal = counts_from_json(s.at("per_reveal"));
  m.digest = j.value("digest", std::string{});
  return m;
}

} // namespace lsb
