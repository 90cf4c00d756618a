#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsbench/state.hpp"

namespace lsb {

// Canonical structure of an answer, keyed by (demo, skill). Equality is the
// judge's notion: maps exact, sets/multisets order-insensitive, sequences
// order-sensitive.
struct CanonicalAnswer {
  enum class Kind {
    CellMap,     // board cells / cup contents: coordinate -> value
    StrSet,      // file or card set differences, coin positions
    ItemSeq,     // ordered items (recall order, card piles top->bottom)
    CountedItems,// count + multiset of items (recall count, file/chip lists)
    ChipCompare  // (endpoint, absolute value difference)
  };

  Kind kind = Kind::CellMap;
  std::map<std::string, std::string> cells;
  std::set<std::string> set_items;
  std::vector<std::string> seq_items;
  int count = 0;
  std::vector<std::string> counted_items; // multiset; order is presentation only
  std::string endpoint; // "start" | "end" | "equal"
  int difference = 0;

  bool operator==(const CanonicalAnswer& other) const;

  static CanonicalAnswer cell_map(std::map<std::string, std::string> m);
  static CanonicalAnswer str_set(std::set<std::string> s);
  static CanonicalAnswer item_seq(std::vector<std::string> v);
  static CanonicalAnswer counted(int n, std::vector<std::string> items);
  static CanonicalAnswer chip_compare(std::string endpoint, int diff);
};

CanonicalAnswer::Kind expected_answer_kind(DemoKind demo, Skill skill);

struct ParseFailure {
  std::size_t position = 0;
  std::string expected;
};

struct AnswerParse {
  std::optional<CanonicalAnswer> value;
  std::optional<ParseFailure> failure;

  bool ok() const { return value.has_value(); }
};

// Operations extracted from free text, in order of appearance. Fragments that
// look like operations but do not parse are recorded as warnings, not errors.
struct ParsedOps {
  std::vector<Operation> ops;
  std::vector<std::string> warnings;
};

// Text after the last case-insensitive "Final Answer:"; the whole response
// when the marker is absent.
std::string extract_final_answer(const std::string& response);

// Tolerant grammar over the template answer formats for (demo, skill).
// skill must not be PredictOperation (use parse_operations for those).
AnswerParse parse_answer(DemoKind demo, Skill skill, const std::string& text);

ParsedOps parse_operations(DemoKind demo, const std::string& text);

// Normal form of a file command used in recall-order items: brace names
// sorted, flag spelled "rm -rf".
std::string canonical_file_cmd(const FileCmdOp& op);

} // namespace lsb
