#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsbench/answer.hpp"
#include "lsbench/scenario.hpp"

namespace lsb {

// Skill-specific sampled parameters. Only the fields relevant to the skill
// are populated (and serialized).
struct QuestionParams {
  // RecallOrder: 1-based inclusive range over the (possibly filtered) op list.
  int start_id = 0;
  int end_id = 0;

  // RecallOrder (Card/Chip/File) and RecallCount criterion:
  //   Number/Circle: direction word; Cup: row digit; File: command kind
  //   ("" = all commands); Card/Chip: "added to" / "removed from".
  std::string criterion;

  // File questions: extension filter ("" = all files) and queried path.
  std::string file_type;

  // Queried container (File path / Card pile / Chip cup).
  std::string container;
  std::string container2; // File CompareState variant 2: the other path

  int variant = 0;   // File CompareState template variant (0..2)
  int cmd_index = 0; // File CompareState variant 2: 1-based op index

  // Level 2/3 anchor: "start" or "end" (the latent endpoint).
  std::string timestamp;
  std::string timestamp2;

  std::vector<Operation> extra_ops; // PredictState
};

struct GroundTruth {
  CanonicalAnswer canonical;
  std::string rendered;

  // PredictOperation only: the target state plus the generator's witness
  // sequence. The witness never appears in the prompt; it exists for
  // self-consistency checks and the oracle responder.
  std::optional<State> target;
  std::vector<Operation> witness_ops;
  std::string witness_text;
};

struct QuestionItem {
  std::string id;
  std::string scenario_id;
  Skill skill = Skill::RecallOrder;
  QuestionParams params;
  std::string prompt;
  GroundTruth truth;
};

std::string build_prompt(const Scenario& scenario, Skill skill,
                         const QuestionParams& params);

QuestionParams sample_question_params(const Scenario& scenario, Skill skill, Rng& rng);

GroundTruth derive_ground_truth(const Scenario& scenario, Skill skill,
                                const QuestionParams& params);

// One item per skill, in skill-enum order. Deterministic in config.seed, so
// items regenerate bit-identically from a stored script.
std::vector<QuestionItem> generate_question_set(const Scenario& scenario);

Json question_to_json(const QuestionItem& q);
QuestionItem question_from_json(const Json& j);

Json canonical_answer_to_json(const CanonicalAnswer& a);
CanonicalAnswer canonical_answer_from_json(const Json& j);

// Rendering helpers shared with the vid2txt emitter and oracle tooling.
std::string render_number_board(const NumberBoard& b);   // "(a,1): 2, ..."
std::string render_circle_board(const CircleGrid& g);    // "(a,0): white, ..."
std::string render_cup_coins(const CupBoard& b);         // "a2, b1, c3"
std::string render_ops_inline(const std::vector<Operation>& ops); // "up, left" etc.

// Comparison scope used by simulate-and-verify for PredictOperation: full
// board for Number/Cup, colors only for Circle, the queried container for
// File/Card/Chip.
bool states_match_in_scope(DemoKind demo, const std::string& container,
                           const State& reached, const State& target);

} // namespace lsb
