#include "lsbench/answer.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace lsb {

namespace {

std::string lower(const std::string& s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Hit {
  std::size_t pos = 0;
  std::size_t end = 0;
  std::string text;
  std::string extra; // secondary capture when needed
};

std::vector<Hit> find_all(const std::string& text, const std::regex& re) {
  std::vector<Hit> hits;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
       it != std::sregex_iterator(); ++it) {
    Hit h;
    h.pos = static_cast<std::size_t>(it->position(0));
    h.end = h.pos + static_cast<std::size_t>(it->length(0));
    h.text = it->str(0);
    hits.push_back(std::move(h));
  }
  return hits;
}

const std::regex& re_paren_coord_value_num() {
  static const std::regex re(R"(\(\s*([a-zA-Z])\s*,\s*(\d+)\s*\)\s*:\s*(\d+))");
  return re;
}

const std::regex& re_paren_coord_value_color() {
  static const std::regex re(R"(\(\s*([a-zA-Z])\s*,\s*(\d+)\s*\)\s*:\s*(black|white))",
                             std::regex::icase);
  return re;
}

const std::regex& re_paren_coord() {
  static const std::regex re(R"(\(\s*([a-zA-Z])\s*,\s*(\d+)\s*\))");
  return re;
}

const std::regex& re_cup_compact() {
  static const std::regex re(R"(\b([a-f])(\d)\b)");
  return re;
}

const std::regex& re_cup_paren() {
  static const std::regex re(R"(\(\s*([a-f])\s*,\s*(\d)\s*\))");
  return re;
}

const std::regex& re_cup_pair() {
  static const std::regex re(R"(\(\s*([a-f])\s*,?\s*(\d)\s*,\s*([a-f])\s*,?\s*(\d)\s*\))");
  return re;
}

const std::regex& re_cup_content() {
  // "a1: coin" or "(a,1): empty"
  static const std::regex re(
      R"((?:\(\s*([a-f])\s*,\s*(\d)\s*\)|\b([a-f])(\d)\b)\s*:\s*(coin|empty))",
      std::regex::icase);
  return re;
}

const std::regex& re_card() {
  static const std::regex re(
      R"(\b(ace|jack|queen|king|10|[2-9])\s+of\s+(hearts|diamonds|clubs|spades)\b)",
      std::regex::icase);
  return re;
}

const std::regex& re_direction() {
  static const std::regex re(R"(\b(left|right|up|down)\b)", std::regex::icase);
  return re;
}

const std::regex& re_file_name() {
  static const std::regex re(R"(\b([A-Za-z0-9_\-]+\.(?:txt|py|csv|json))\b)",
                             std::regex::icase);
  return re;
}

const std::regex& re_bare_int() {
  static const std::regex re(R"(\b(\d+)\b)");
  return re;
}

const std::regex& re_count_unit() {
  static const std::regex re(
      "\\b(\\d+)\\s*(?:`?\\.(?:txt|py|csv|json)`?\\s*)?"
      "(chips?|cards?|files?|times?|moves?|swaps?|commands?|coins?|instances?|"
      "occurrences?)\\b",
      std::regex::icase);
  return re;
}

const std::regex& re_pile_name() {
  static const std::regex re(R"(\bpile(\d+)\b)", std::regex::icase);
  return re;
}

const std::regex& re_cup_name() {
  static const std::regex re(R"(\bcup(\d+)\b)", std::regex::icase);
  return re;
}

const std::regex& re_action_word() {
  static const std::regex re(R"(\b(add|adding|added|remove|removing|removed)\b)",
                             std::regex::icase);
  return re;
}

const std::regex& re_file_keyword() {
  static const std::regex re(R"(\b(touch|rm|cp|mv)\b)", std::regex::icase);
  return re;
}

std::string norm_paren_coord(const std::string& raw) {
  static const std::regex re(R"(\(\s*([a-zA-Z])\s*,\s*(\d+)\s*\))");
  std::smatch m;
  std::regex_search(raw, m, re);
  return "(" + lower(m.str(1)) + "," + m.str(2) + ")";
}

std::string norm_int(const std::string& raw) {
  return std::to_string(std::stoi(raw));
}

std::optional<Card> card_from_match(const std::smatch& m) {
  const int value = card_value_from_string(m.str(1));
  if (value < 0) return std::nullopt;
  return Card{value, suit_from_string(m.str(2))};
}

bool says_none(const std::string& lowered) {
  static const std::regex re_zero(R"(\b0\b)");
  return lowered.find("none") != std::string::npos ||
         lowered.find("no file") != std::string::npos ||
         lowered.find("no card") != std::string::npos ||
         lowered.find("no chip") != std::string::npos ||
         lowered.find("no coin") != std::string::npos ||
         lowered.find("no difference") != std::string::npos ||
         lowered.find("no such") != std::string::npos ||
         lowered.find("nothing") != std::string::npos ||
         lowered.find("empty") != std::string::npos ||
         std::regex_search(lowered, re_zero);
}

AnswerParse fail(std::size_t pos, std::string expected) {
  AnswerParse out;
  out.failure = ParseFailure{pos, std::move(expected)};
  return out;
}

AnswerParse succeed(CanonicalAnswer value) {
  AnswerParse out;
  out.value = std::move(value);
  return out;
}

// ---- per-demo item scans ----------------------------------------------------

std::vector<Hit> scan_cards(const std::string& text) {
  std::vector<Hit> hits;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re_card());
       it != std::sregex_iterator(); ++it) {
    const auto card = card_from_match(*it);
    if (!card) continue;
    Hit h;
    h.pos = static_cast<std::size_t>(it->position(0));
    h.end = h.pos + static_cast<std::size_t>(it->length(0));
    h.text = to_string(*card);
    hits.push_back(std::move(h));
  }
  return hits;
}

std::vector<Hit> scan_legal_chips(const std::string& text) {
  std::vector<Hit> hits;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re_bare_int());
       it != std::sregex_iterator(); ++it) {
    const int v = std::stoi(it->str(1));
    if (!is_legal_chip(v)) continue;
    Hit h;
    h.pos = static_cast<std::size_t>(it->position(0));
    h.end = h.pos + static_cast<std::size_t>(it->length(0));
    h.text = std::to_string(v);
    hits.push_back(std::move(h));
  }
  return hits;
}

std::vector<Hit> scan_cup_coords(const std::string& text) {
  std::vector<Hit> hits;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re_cup_compact());
       it != std::sregex_iterator(); ++it) {
    Hit h;
    h.pos = static_cast<std::size_t>(it->position(0));
    h.end = h.pos + static_cast<std::size_t>(it->length(0));
    h.text = lower(it->str(1)) + it->str(2);
    hits.push_back(std::move(h));
  }
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re_cup_paren());
       it != std::sregex_iterator(); ++it) {
    Hit h;
    h.pos = static_cast<std::size_t>(it->position(0));
    h.end = h.pos + static_cast<std::size_t>(it->length(0));
    h.text = lower(it->str(1)) + it->str(2);
    hits.push_back(std::move(h));
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.pos < b.pos; });
  return hits;
}

// Pair every anchor hit with the first satellite hit strictly after it and
// before the next anchor. Items where no satellite exists are dropped.
std::vector<std::string> pair_hits(const std::vector<Hit>& anchors,
                                   const std::vector<Hit>& satellites,
                                   const std::string& sep) {
  std::vector<std::string> items;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const std::size_t window_end =
        (i + 1 < anchors.size()) ? anchors[i + 1].pos : std::string::npos;
    for (const Hit& s : satellites) {
      if (s.pos >= anchors[i].end && (window_end == std::string::npos || s.pos < window_end)) {
        items.push_back(anchors[i].text + sep + s.text);
        break;
      }
    }
  }
  return items;
}

struct CountScan {
  bool explicit_count = false;
  int count = 0;
  std::size_t items_from = 0; // parse items at/after this offset
};

CountScan scan_count(const std::string& text) {
  CountScan out;
  std::smatch m;
  if (std::regex_search(text, m, re_count_unit())) {
    out.explicit_count = true;
    out.count = std::stoi(m.str(1));
    out.items_from = static_cast<std::size_t>(m.position(0) + m.length(0));
  }
  return out;
}

template <typename ScanFn>
AnswerParse parse_counted(const std::string& text, ScanFn scan, const char* what) {
  const CountScan cs = scan_count(text);
  const std::string tail = text.substr(std::min(cs.items_from, text.size()));
  std::vector<Hit> hits = scan(tail);
  std::vector<std::string> items;
  for (const Hit& h : hits) items.push_back(h.text);
  if (!cs.explicit_count && items.empty()) {
    if (says_none(lower(text))) return succeed(CanonicalAnswer::counted(0, {}));
    return fail(0, std::string("a count and a list of ") + what);
  }
  const int count = cs.explicit_count ? cs.count : static_cast<int>(items.size());
  return succeed(CanonicalAnswer::counted(count, std::move(items)));
}

// ---- file command scanning --------------------------------------------------

struct FileCmdScan {
  std::vector<Operation> ops;
  std::vector<std::string> warnings;
};

std::vector<std::string> expand_braces(const std::string& inner) {
  std::vector<std::string> names;
  std::string current;
  for (const char c : inner) {
    if (c == ',') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(current);
  return names;
}

FileCmdScan scan_file_commands(const std::string& text) {
  FileCmdScan out;
  const auto keywords = find_all(text, re_file_keyword());
  static const std::regex re_brace_target(R"(^\s*(?:-rf?\s+)?(path\d+)/\{([^{}]*)\})");
  static const std::regex re_single_target(R"(^\s*(?:-rf?\s+)?(path\d+)/([A-Za-z0-9_.\-]+))");
  static const std::regex re_move_args(
      R"(^\s+(path\d+)/([A-Za-z0-9_.\-]+)\s+(path\d+)/?)");

  for (std::size_t i = 0; i < keywords.size(); ++i) {
    const std::string kw = lower(keywords[i].text);
    const std::size_t window_end =
        (i + 1 < keywords.size()) ? keywords[i + 1].pos : text.size();
    const std::string window =
        text.substr(keywords[i].end, window_end - keywords[i].end);
    std::smatch m;
    if (kw == "touch" || kw == "rm") {
      FileCmdOp op;
      op.kind = kw == "touch" ? FileCmdKind::Touch : FileCmdKind::Rm;
      if (std::regex_search(window, m, re_brace_target)) {
        if (m.str(2).find('{') != std::string::npos) {
          out.warnings.push_back("nested braces rejected near '" + kw + "'");
          continue;
        }
        op.path = m.str(1);
        op.names = expand_braces(m.str(2));
      } else if (std::regex_search(window, m, re_single_target)) {
        op.path = m.str(1);
        op.names = {m.str(2)};
      } else {
        out.warnings.push_back("unparsable " + kw + " command");
        continue;
      }
      if (op.names.empty()) {
        out.warnings.push_back("empty brace list after " + kw);
        continue;
      }
      out.ops.push_back(op);
    } else {
      FileCmdOp op;
      op.kind = kw == "cp" ? FileCmdKind::Cp : FileCmdKind::Mv;
      if (!std::regex_search(window, m, re_move_args)) {
        out.warnings.push_back("unparsable " + kw + " command");
        continue;
      }
      op.src_path = m.str(1);
      op.name = m.str(2);
      op.dst_path = m.str(3);
      out.ops.push_back(op);
    }
  }
  return out;
}

} // namespace

std::string canonical_file_cmd(const FileCmdOp& op) {
  FileCmdOp sorted = op;
  std::sort(sorted.names.begin(), sorted.names.end());
  return render_file_cmd(sorted);
}

CanonicalAnswer CanonicalAnswer::cell_map(std::map<std::string, std::string> m) {
  CanonicalAnswer a;
  a.kind = Kind::CellMap;
  a.cells = std::move(m);
  return a;
}

CanonicalAnswer CanonicalAnswer::str_set(std::set<std::string> s) {
  CanonicalAnswer a;
  a.kind = Kind::StrSet;
  a.set_items = std::move(s);
  return a;
}

CanonicalAnswer CanonicalAnswer::item_seq(std::vector<std::string> v) {
  CanonicalAnswer a;
  a.kind = Kind::ItemSeq;
  a.seq_items = std::move(v);
  return a;
}

CanonicalAnswer CanonicalAnswer::counted(int n, std::vector<std::string> items) {
  CanonicalAnswer a;
  a.kind = Kind::CountedItems;
  a.count = n;
  a.counted_items = std::move(items);
  return a;
}

CanonicalAnswer CanonicalAnswer::chip_compare(std::string endpoint, int diff) {
  CanonicalAnswer a;
  a.kind = Kind::ChipCompare;
  a.endpoint = std::move(endpoint);
  a.difference = diff;
  return a;
}

bool CanonicalAnswer::operator==(const CanonicalAnswer& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::CellMap: return cells == other.cells;
    case Kind::StrSet: return set_items == other.set_items;
    case Kind::ItemSeq: return seq_items == other.seq_items;
    case Kind::CountedItems: {
      if (count != other.count) return false;
      auto a = counted_items;
      auto b = other.counted_items;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case Kind::ChipCompare:
      return endpoint == other.endpoint && difference == other.difference;
  }
  return false;
}

CanonicalAnswer::Kind expected_answer_kind(DemoKind demo, Skill skill) {
  using K = CanonicalAnswer::Kind;
  switch (skill) {
    case Skill::RecallOrder: return K::ItemSeq;
    case Skill::RecallCount: return K::CountedItems;
    case Skill::InferState:
    case Skill::PredictState:
      switch (demo) {
        case DemoKind::Number:
        case DemoKind::Circle: return K::CellMap;
        case DemoKind::Cup: return K::StrSet;
        case DemoKind::File:
        case DemoKind::Chip: return K::CountedItems;
        case DemoKind::Card: return K::ItemSeq;
      }
      break;
    case Skill::CompareState:
      switch (demo) {
        case DemoKind::Number:
        case DemoKind::Circle:
        case DemoKind::Cup: return K::CellMap;
        case DemoKind::File:
        case DemoKind::Card: return K::StrSet;
        case DemoKind::Chip: return K::ChipCompare;
      }
      break;
    case Skill::PredictOperation:
      throw std::invalid_argument("predict_operation answers are operation lists");
  }
  throw std::logic_error("bad demo/skill");
}

std::string extract_final_answer(const std::string& response) {
  static const std::string marker = "final answer:";
  const std::string lowered = lower(response);
  const std::size_t pos = lowered.rfind(marker);
  if (pos == std::string::npos) return response;
  std::string out = response.substr(pos + marker.size());
  const std::size_t first = out.find_first_not_of(" \t\r\n");
  return first == std::string::npos ? std::string{} : out.substr(first);
}

AnswerParse parse_answer(DemoKind demo, Skill skill, const std::string& text) {
  using K = CanonicalAnswer::Kind;
  const K kind = expected_answer_kind(demo, skill);

  switch (kind) {
    case K::CellMap: {
      std::map<std::string, std::string> cells;
      if (demo == DemoKind::Number) {
        for (auto it = std::sregex_iterator(text.begin(), text.end(),
                                            re_paren_coord_value_num());
             it != std::sregex_iterator(); ++it)
          cells["(" + lower(it->str(1)) + "," + it->str(2) + ")"] = norm_int(it->str(3));
      } else if (demo == DemoKind::Circle) {
        for (auto it = std::sregex_iterator(text.begin(), text.end(),
                                            re_paren_coord_value_color());
             it != std::sregex_iterator(); ++it)
          cells["(" + lower(it->str(1)) + "," + it->str(2) + ")"] = lower(it->str(3));
      } else { // Cup compare: coordinate -> coin/empty
        for (auto it = std::sregex_iterator(text.begin(), text.end(), re_cup_content());
             it != std::sregex_iterator(); ++it) {
          const std::string coord = it->str(1).empty()
                                        ? lower(it->str(3)) + it->str(4)
                                        : lower(it->str(1)) + it->str(2);
          cells[coord] = lower(it->str(5));
        }
      }
      if (cells.empty()) {
        if (says_none(lower(text)))
          return succeed(CanonicalAnswer::cell_map({}));
        return fail(0, "coordinate: value pairs");
      }
      return succeed(CanonicalAnswer::cell_map(std::move(cells)));
    }

    case K::StrSet: {
      std::set<std::string> items;
      if (demo == DemoKind::Cup) {
        for (const Hit& h : scan_cup_coords(text)) items.insert(h.text);
      } else if (demo == DemoKind::File) {
        for (const Hit& h : find_all(text, re_file_name())) items.insert(lower(h.text));
      } else { // Card
        for (const Hit& h : scan_cards(text)) items.insert(h.text);
      }
      if (items.empty()) {
        if (says_none(lower(text))) return succeed(CanonicalAnswer::str_set({}));
        return fail(0, "a list of items");
      }
      return succeed(CanonicalAnswer::str_set(std::move(items)));
    }

    case K::ItemSeq: {
      std::vector<std::string> items;
      if (skill == Skill::RecallOrder) {
        switch (demo) {
          case DemoKind::Number: {
            std::vector<Hit> coords;
            for (const Hit& h : find_all(text, re_paren_coord())) {
              Hit n = h;
              n.text = norm_paren_coord(h.text);
              coords.push_back(n);
            }
            std::vector<Hit> dirs;
            for (const Hit& h : find_all(text, re_direction())) {
              Hit n = h;
              n.text = lower(h.text);
              dirs.push_back(n);
            }
            items = pair_hits(coords, dirs, " ");
            break;
          }
          case DemoKind::Circle: {
            for (const Hit& h : find_all(text, re_direction())) items.push_back(lower(h.text));
            break;
          }
          case DemoKind::Cup: {
            for (auto it = std::sregex_iterator(text.begin(), text.end(), re_cup_pair());
                 it != std::sregex_iterator(); ++it) {
              std::string a = lower(it->str(1)) + it->str(2);
              std::string b = lower(it->str(3)) + it->str(4);
              if (b < a) std::swap(a, b);
              items.push_back("(" + a + ", " + b + ")");
            }
            break;
          }
          case DemoKind::File: {
            for (const auto& op : scan_file_commands(text).ops)
              items.push_back(canonical_file_cmd(std::get<FileCmdOp>(op)));
            break;
          }
          case DemoKind::Card:
            items = pair_hits(scan_cards(text), find_all(text, re_pile_name()), ", ");
            break;
          case DemoKind::Chip:
            items = pair_hits(scan_legal_chips(text), find_all(text, re_cup_name()), ", ");
            break;
        }
      } else { // Card pile contents, top -> bottom
        for (const Hit& h : scan_cards(text)) items.push_back(h.text);
      }
      if (items.empty()) {
        if (says_none(lower(text))) return succeed(CanonicalAnswer::item_seq({}));
        return fail(0, "an ordered list of items");
      }
      return succeed(CanonicalAnswer::item_seq(std::move(items)));
    }

    case K::CountedItems: {
      switch (demo) {
        case DemoKind::Number:
        case DemoKind::Circle:
          return parse_counted(
              text,
              [](const std::string& t) {
                std::vector<Hit> hits;
                for (const Hit& h : find_all(t, re_paren_coord())) {
                  Hit n = h;
                  n.text = norm_paren_coord(h.text);
                  hits.push_back(n);
                }
                return hits;
              },
              "coordinates");
        case DemoKind::Cup:
          return parse_counted(
              text,
              [](const std::string& t) {
                // tuples first, then singles outside tuple spans
                std::vector<Hit> hits;
                std::vector<std::pair<std::size_t, std::size_t>> spans;
                for (auto it = std::sregex_iterator(t.begin(), t.end(), re_cup_pair());
                     it != std::sregex_iterator(); ++it) {
                  Hit h;
                  h.pos = static_cast<std::size_t>(it->position(0));
                  h.end = h.pos + static_cast<std::size_t>(it->length(0));
                  std::string a = lower(it->str(1)) + it->str(2);
                  std::string b = lower(it->str(3)) + it->str(4);
                  if (b < a) std::swap(a, b);
                  h.text = "(" + a + "," + b + ")";
                  spans.emplace_back(h.pos, h.end);
                  hits.push_back(std::move(h));
                }
                for (const Hit& h : scan_cup_coords(t)) {
                  bool inside = false;
                  for (const auto& [s, e] : spans)
                    if (h.pos >= s && h.pos < e) inside = true;
                  if (!inside) hits.push_back(h);
                }
                std::sort(hits.begin(), hits.end(),
                          [](const Hit& a, const Hit& b) { return a.pos < b.pos; });
                return hits;
              },
              "cup coordinates");
        case DemoKind::File:
          return parse_counted(
              text,
              [](const std::string& t) {
                std::vector<Hit> hits;
                for (const Hit& h : find_all(t, re_file_name())) {
                  Hit n = h;
                  n.text = lower(h.text);
                  hits.push_back(n);
                }
                return hits;
              },
              "file names");
        case DemoKind::Card:
          return parse_counted(text, scan_cards, "cards");
        case DemoKind::Chip:
          return parse_counted(text, scan_legal_chips, "chip values");
      }
      throw std::logic_error("bad demo");
    }

    case K::ChipCompare: {
      static const std::regex re_endpoint(
          R"(\b(start|beginning|begin|end|ending|equal|same|tie)\b)", std::regex::icase);
      std::smatch m;
      if (!std::regex_search(text, m, re_endpoint))
        return fail(0, "an endpoint (start/end/equal)");
      const std::string word = lower(m.str(1));
      std::string endpoint = "equal";
      if (word == "start" || word == "beginning" || word == "begin") endpoint = "start";
      else if (word == "end" || word == "ending") endpoint = "end";

      const std::string after = m.suffix().str();
      std::smatch vm;
      int diff = 0;
      if (std::regex_search(after, vm, re_bare_int()))
        diff = std::stoi(vm.str(1));
      else if (std::regex_search(text, vm, re_bare_int()))
        diff = std::stoi(vm.str(1));
      else if (endpoint != "equal")
        return fail(0, "a value difference");
      return succeed(CanonicalAnswer::chip_compare(endpoint, diff));
    }
  }
  throw std::logic_error("unreachable");
}

ParsedOps parse_operations(DemoKind demo, const std::string& text) {
  ParsedOps out;
  switch (demo) {
    case DemoKind::Number:
      for (const Hit& h : find_all(text, re_direction()))
        out.ops.push_back(SlideOp{direction_from_string(lower(h.text))});
      break;
    case DemoKind::Circle:
      for (const Hit& h : find_all(text, re_direction()))
        out.ops.push_back(CircleMoveOp{direction_from_string(lower(h.text))});
      break;
    case DemoKind::Cup:
      for (auto it = std::sregex_iterator(text.begin(), text.end(), re_cup_pair());
           it != std::sregex_iterator(); ++it) {
        const Coord a{std::stoi(it->str(2)) - 1, lower(it->str(1))[0] - 'a'};
        const Coord b{std::stoi(it->str(4)) - 1, lower(it->str(3))[0] - 'a'};
        out.ops.push_back(CupSwapOp{a, b});
      }
      break;
    case DemoKind::File: {
      FileCmdScan scan = scan_file_commands(text);
      out.ops = std::move(scan.ops);
      out.warnings = std::move(scan.warnings);
      break;
    }
    case DemoKind::Card: {
      const auto actions = find_all(text, re_action_word());
      const auto cards = scan_cards(text);
      const auto piles = find_all(text, re_pile_name());
      for (std::size_t i = 0; i < actions.size(); ++i) {
        const std::size_t window_end =
            (i + 1 < actions.size()) ? actions[i + 1].pos : text.size();
        const Hit* card = nullptr;
        for (const Hit& c : cards)
          if (c.pos >= actions[i].end && c.pos < window_end) {
            card = &c;
            break;
          }
        const Hit* pile = nullptr;
        if (card)
          for (const Hit& p : piles)
            if (p.pos >= card->end && p.pos < window_end) {
              pile = &p;
              break;
            }
        if (!card || !pile) {
          out.warnings.push_back("incomplete card action near '" + actions[i].text + "'");
          continue;
        }
        CardActOp op;
        op.add = lower(actions[i].text).rfind("add", 0) == 0;
        const auto sep = card->text.find(" of ");
        op.card = Card{card_value_from_string(card->text.substr(0, sep)),
                       suit_from_string(card->text.substr(sep + 4))};
        op.pile = lower(pile->text);
        out.ops.push_back(op);
      }
      break;
    }
    case DemoKind::Chip: {
      const auto actions = find_all(text, re_action_word());
      const auto values = find_all(text, re_bare_int());
      const auto cups = find_all(text, re_cup_name());
      for (std::size_t i = 0; i < actions.size(); ++i) {
        const std::size_t window_end =
            (i + 1 < actions.size()) ? actions[i + 1].pos : text.size();
        const Hit* value = nullptr;
        for (const Hit& v : values)
          if (v.pos >= actions[i].end && v.pos < window_end) {
            value = &v;
            break;
          }
        const Hit* cup = nullptr;
        if (value)
          for (const Hit& c : cups)
            if (c.pos >= value->end && c.pos < window_end) {
              cup = &c;
              break;
            }
        if (!value || !cup) {
          out.warnings.push_back("incomplete chip action near '" + actions[i].text + "'");
          continue;
        }
        ChipActOp op;
        op.add = lower(actions[i].text).rfind("add", 0) == 0;
        op.value = std::stoi(value->text);
        op.cup = lower(cup->text);
        out.ops.push_back(op);
      }
      break;
    }
  }
  return out;
}

} // namespace lsb
