#include "lsbench/jsonio.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lsb {

namespace {

std::string coord_key(Coord c) {
  // letter = first axis (rows for Number, columns for Circle/Cup); the codec
  // stores plain (row, col) so no display convention leaks into scripts.
  return std::to_string(c.row) + "," + std::to_string(c.col);
}

Coord coord_from_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad coord key: " + key);
  return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
}

Card card_from_text(const std::string& text) {
  const auto sep = text.find(" of ");
  if (sep == std::string::npos) throw std::invalid_argument("bad card text: " + text);
  const int value = card_value_from_string(text.substr(0, sep));
  if (value < 0) throw std::invalid_argument("bad card value: " + text);
  return {value, suit_from_string(text.substr(sep + 4))};
}

} // namespace

Json state_to_json(const State& s) {
  Json j;
  j["demo"] = to_string(demo_kind(s));
  if (const auto* n = std::get_if<NumberBoard>(&s)) {
    j["size"] = n->size;
    Json rows = Json::array();
    for (int r = 0; r < n->size; ++r) {
      Json row = Json::array();
      for (int c = 0; c < n->size; ++c) row.push_back(n->at({r, c}));
      rows.push_back(std::move(row));
    }
    j["cells"] = std::move(rows);
  } else if (const auto* g = std::get_if<CircleGrid>(&s)) {
    j["size"] = g->size;
    Json rows = Json::array();
    for (int r = 0; r < g->size; ++r) {
      std::string row;
      for (int c = 0; c < g->size; ++c)
        row += g->at({r, c}) == PieceColor::Black ? 'b' : 'w';
      rows.push_back(row);
    }
    j["colors"] = std::move(rows);
    j["circle"] = coord_key(g->circle);
  } else if (const auto* b = std::get_if<CupBoard>(&s)) {
    j["size"] = b->size;
    Json coins = Json::array();
    for (const Coord& c : b->coins) coins.push_back(coord_key(c));
    j["coins"] = std::move(coins);
  } else if (const auto* f = std::get_if<FileSystemState>(&s)) {
    j["paths"] = f->paths;
    Json contents;
    for (const auto& p : f->paths) contents[p] = f->contents.at(p);
    j["contents"] = std::move(contents);
  } else if (const auto* p = std::get_if<CardPiles>(&s)) {
    j["pile_names"] = p->pile_names;
    Json piles;
    for (const auto& name : p->pile_names) {
      Json pile = Json::array();
      for (const Card& c : p->piles.at(name)) pile.push_back(to_string(c));
      piles[name] = std::move(pile);
    }
    j["piles"] = std::move(piles);
  } else if (const auto* h = std::get_if<ChipCups>(&s)) {
    j["cup_names"] = h->cup_names;
    Json cups;
    for (const auto& name : h->cup_names) cups[name] = h->cups.at(name);
    j["cups"] = std::move(cups);
  }
  return j;
}

State state_from_json(const Json& j) {
  const DemoKind kind = demo_kind_from_string(j.at("demo").get<std::string>());
  switch (kind) {
    case DemoKind::Number: {
      NumberBoard b;
      b.size = j.at("size").get<int>();
      for (const auto& row : j.at("cells"))
        for (const auto& v : row) b.cells.push_back(v.get<int>());
      if (static_cast<int>(b.cells.size()) != b.size * b.size)
        throw std::invalid_argument("number board shape mismatch");
      return b;
    }
    case DemoKind::Circle: {
      CircleGrid g;
      g.size = j.at("size").get<int>();
      for (const auto& row : j.at("colors"))
        for (const char ch : row.get<std::string>())
          g.colors.push_back(ch == 'b' ? PieceColor::Black : PieceColor::White);
      if (static_cast<int>(g.colors.size()) != g.size * g.size)
        throw std::invalid_argument("circle grid shape mismatch");
      g.circle = coord_from_key(j.at("circle").get<std::string>());
      return g;
    }
    case DemoKind::Cup: {
      CupBoard b;
      b.size = j.at("size").get<int>();
      for (const auto& c : j.at("coins"))
        b.coins.insert(coord_from_key(c.get<std::string>()));
      return b;
    }
    case DemoKind::File: {
      FileSystemState f;
      f.paths = j.at("paths").get<std::vector<std::string>>();
      for (const auto& p : f.paths)
        f.contents[p] = j.at("contents").at(p).get<std::vector<std::string>>();
      return f;
    }
    case DemoKind::Card: {
      CardPiles p;
      p.pile_names = j.at("pile_names").get<std::vector<std::string>>();
      for (const auto& name : p.pile_names) {
        std::vector<Card> pile;
        for (const auto& c : j.at("piles").at(name))
          pile.push_back(card_from_text(c.get<std::string>()));
        p.piles[name] = std::move(pile);
      }
      return p;
    }
    case DemoKind::Chip: {
      ChipCups h;
      h.cup_names = j.at("cup_names").get<std::vector<std::string>>();
      for (const auto& name : h.cup_names)
        h.cups[name] = j.at("cups").at(name).get<std::vector<int>>();
      return h;
    }
  }
  throw std::logic_error("bad demo kind");
}

Json op_to_json(const Operation& op) {
  Json j;
  if (const auto* slide = std::get_if<SlideOp>(&op)) {
    j["kind"] = "slide";
    j["dir"] = to_string(slide->dir);
  } else if (const auto* mv = std::get_if<CircleMoveOp>(&op)) {
    j["kind"] = "circle_move";
    j["dir"] = to_string(mv->dir);
  } else if (const auto* swap = std::get_if<CupSwapOp>(&op)) {
    j["kind"] = "cup_swap";
    j["a"] = coord_key(swap->a);
    j["b"] = coord_key(swap->b);
  } else if (const auto* cmd = std::get_if<FileCmdOp>(&op)) {
    j["kind"] = "file";
    switch (cmd->kind) {
      case FileCmdKind::Touch: j["cmd"] = "touch"; break;
      case FileCmdKind::Rm: j["cmd"] = "rm"; break;
      case FileCmdKind::Cp: j["cmd"] = "cp"; break;
      case FileCmdKind::Mv: j["cmd"] = "mv"; break;
    }
    if (cmd->kind == FileCmdKind::Touch || cmd->kind == FileCmdKind::Rm) {
      j["path"] = cmd->path;
      j["names"] = cmd->names;
    } else {
      j["src"] = cmd->src_path;
      j["dst"] = cmd->dst_path;
      j["name"] = cmd->name;
    }
  } else if (const auto* act = std::get_if<CardActOp>(&op)) {
    j["kind"] = "card";
    j["action"] = act->add ? "add" : "remove";
    j["card"] = to_string(act->card);
    j["pile"] = act->pile;
  } else if (const auto* chip = std::get_if<ChipActOp>(&op)) {
    j["kind"] = "chip";
    j["action"] = chip->add ? "add" : "remove";
    j["value"] = chip->value;
    j["cup"] = chip->cup;
  }
  return j;
}

Operation op_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "slide")
    return SlideOp{direction_from_string(j.at("dir").get<std::string>())};
  if (kind == "circle_move")
    return CircleMoveOp{direction_from_string(j.at("dir").get<std::string>())};
  if (kind == "cup_swap")
    return CupSwapOp{coord_from_key(j.at("a").get<std::string>()),
                     coord_from_key(j.at("b").get<std::string>())};
  if (kind == "file") {
    FileCmdOp op;
    const std::string cmd = j.at("cmd").get<std::string>();
    if (cmd == "touch") op.kind = FileCmdKind::Touch;
    else if (cmd == "rm") op.kind = FileCmdKind::Rm;
    else if (cmd == "cp") op.kind = FileCmdKind::Cp;
    else if (cmd == "mv") op.kind = FileCmdKind::Mv;
    else throw std::invalid_argument("bad file cmd: " + cmd);
    if (op.kind == FileCmdKind::Touch || op.kind == FileCmdKind::Rm) {
      op.path = j.at("path").get<std::string>();
      op.names = j.at("names").get<std::vector<std::string>>();
    } else {
      op.src_path = j.at("src").get<std::string>();
      op.dst_path = j.at("dst").get<std::string>();
      op.name = j.at("name").get<std::string>();
    }
    return op;
  }
  if (kind == "card") {
    CardActOp op;
    op.add = j.at("action").get<std::string>() == "add";
    op.card = card_from_text(j.at("card").get<std::string>());
    op.pile = j.at("pile").get<std::string>();
    return op;
  }
  if (kind == "chip") {
    ChipActOp op;
    op.add = j.at("action").get<std::string>() == "add";
    op.value = j.at("value").get<int>();
    op.cup = j.at("cup").get<std::string>();
    return op;
  }
  throw std::invalid_argument("bad op kind: " + kind);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace lsb
