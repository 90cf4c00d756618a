#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsbench/jsonio.hpp"
#include "lsbench/rng.hpp"
#include "lsbench/state.hpp"

namespace lsb {

struct ScenarioConfig {
  DemoKind demo = DemoKind::Number;
  // Board side (3..6) for Number/Circle/Cup; container count (1..2) for
  // File/Card/Chip.
  int state_size = 3;
  int op_count = 1;
  Reveal reveal = Reveal::Begin;
  std::uint64_t seed = 0;

  void validate() const; // throws std::invalid_argument

  bool operator==(const ScenarioConfig&) const = default;
};

Json config_to_json(const ScenarioConfig& c);
ScenarioConfig config_from_json(const Json& j);

// A fully simulated task instance: states[t+1] == apply_op(states[t], ops[t]).
struct Scenario {
  ScenarioConfig config;
  std::vector<State> states; // length op_count + 1
  std::vector<Operation> ops;
  std::string id; // content hash of config+states+ops

  const State& initial() const { return states.front(); }
  const State& final() const { return states.back(); }
  // The endpoint hidden from the viewer, anchoring Level-2/3 questions.
  const State& latent_endpoint() const {
    return config.reveal == Reveal::Begin ? states.back() : states.front();
  }
  std::string latent_timestamp() const {
    return config.reveal == Reveal::Begin ? "end" : "start";
  }
  std::string revealed_timestamp() const {
    return config.reveal == Reveal::Begin ? "start" : "end";
  }
  // Container names for File/Card/Chip ("path0", "pile1", ...).
  std::vector<std::string> container_names() const;
};

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);
std::string scenario_content_id(const Scenario& s);

Scenario generate_scenario(const ScenarioConfig& config);

// Uniform draw from the valid-op set of `state`, excluding (once) an op that
// would exactly undo the previous transition. `previous` is the state before
// the last applied op, if any.
Operation sample_valid_op(const State& state, const std::optional<State>& previous,
                          Rng& rng);

// Stateful op sampling across a whole scenario. Tracks which deck cards have
// appeared so Card additions always introduce a previously unused card.
class OpSampler {
 public:
  // Register the cards visible in `state` (any demo; no-op except Card).
  void note_state(const State& state);
  Operation sample(const State& state, const std::optional<State>& previous, Rng& rng);

 private:
  Operation sample_once(const State& state, Rng& rng);
  std::set<Card> used_cards_;
};

// All valid ops for the enumerable demos (Number/Circle/Cup). Used by tests
// and the uniform sampler.
std::vector<Operation> enumerate_valid_ops(const State& state);

struct SlotSpec {
  DemoKind demo = DemoKind::Number;
  int state_size = 3;
  int op_min = 5;
  int op_max = 9;
  // "begin", "end" or "split" (alternating within the slot group).
  std::string reveal = "split";
  int count = 1;
};

struct BenchmarkSpec {
  std::uint64_t master_seed = 0;
  std::vector<SlotSpec> slots;
  int questions_per_video = 6;

  int total_videos() const;
  void validate() const; // throws std::invalid_argument
};

// The published balance: 240 videos, 40 per demonstration, split evenly over
// op-count buckets 5-9/10-14, the two state-size variants and reveal timings.
BenchmarkSpec default_benchmark_spec(std::uint64_t master_seed);

Json spec_to_json(const BenchmarkSpec& spec);
BenchmarkSpec spec_from_json(const Json& j);

struct ManifestEntry {
  std::string id;
  ScenarioConfig config;
  std::string config_digest;
  std::string script_path;
  std::string frames_dir;
  std::string questions_path;
};

struct BalanceSummary {
  int videos = 0;
  int questions = 0;
  std::map<std::string, int> per_demo;
  std::map<std::string, int> per_skill;
  std::map<std::string, int> per_bucket;
  std::map<std::string, int> per_size_variant;
  std::map<std::string, int> per_reveal;

  bool operator==(const BalanceSummary&) const = default;
};

struct Manifest {
  BenchmarkSpec spec;
  std::vector<ManifestEntry> entries;
  BalanceSummary summary;
  std::string digest;
};

// Bucket / size-variant labels used in summaries and reports.
std::string op_bucket_label(const BenchmarkSpec& spec, int op_count);
std::string size_variant_label(DemoKind demo, int state_size);

// Deterministic expansion of the spec into scenarios. Scenario seeds are
// substream_seed(master_seed, slot_index) so any slot can be regenerated
// in isolation.
std::vector<Scenario> generate_benchmark_scenarios(const BenchmarkSpec& spec);

BalanceSummary summarize(const BenchmarkSpec& spec, const std::vector<ManifestEntry>& entries);

Json manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const Json& j);
std::string manifest_digest(const Manifest& m);

} // namespace lsb
