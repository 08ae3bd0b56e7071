#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lionsweep/dynamics.hpp"
#include "lionsweep/error.hpp"

namespace lionsweep {

// Moves are encoded as JSON arrays with one entry per lion: -1 for stay,
// otherwise the target vertex. A trace is JSON Lines, one record per time
// step: {"t":..,"lions":[..],"cleared":[..],"move":[..]}, where "move" is the
// step that produced the record's state (empty at t = 0).

inline nlohmann::json move_to_json(const MoveStep& mv) {
  auto arr = nlohmann::json::array();
  for (const auto& a : mv.actions) arr.push_back(a ? static_cast<long long>(*a) : -1LL);
  return arr;
}

inline MoveStep move_from_json(const nlohmann::json& j, std::size_t line_no) {
  if (!j.is_array()) throw ParseError(line_no, "move must be a JSON array");
  MoveStep mv;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(line_no, "move entries must be integers");
    auto v = e.get<long long>();
    if (v < -1) throw ParseError(line_no, "move entry below -1");
    if (v == -1) {
      mv.actions.emplace_back(std::nullopt);
    } else {
      mv.actions.emplace_back(static_cast<Vertex>(v));
    }
  }
  return mv;
}

inline void write_moves(std::ostream& out, const std::vector<MoveStep>& moves) {
  for (const auto& mv : moves) out << move_to_json(mv).dump() << '\n';
}

inline std::vector<MoveStep> read_moves(std::istream& in) {
  std::vector<MoveStep> moves;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line_no, e.what());
    }
    moves.push_back(move_from_json(j, line_no));
  }
  return moves;
}

inline nlohmann::json state_to_json(const SimState& s, const MoveStep* into) {
  nlohmann::json rec;
  rec["t"] = s.time;
  rec["lions"] = s.lions;
  rec["cleared"] = s.cleared.members();
  rec["move"] = into ? move_to_json(*into) : nlohmann::json::array();
  return rec;
}

inline void write_trace(std::ostream& out, const Trace& tr) {
  for (std::size_t t = 0; t < tr.states.size(); ++t) {
    const MoveStep* into = t == 0 ? nullptr : &tr.moves[t - 1];
    out << state_to_json(tr.states[t], into).dump() << '\n';
  }
}

inline Trace read_trace(std::istream& in, std::size_t vertex_count) {
  Trace tr;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto rec = nlohmann::json::parse(line);
      SimState s;
      s.time = rec.at("t").get<std::size_t>();
      s.lions = rec.at("lions").get<LionPositions>();
      s.cleared = VertexSet(vertex_count);
      for (auto v : rec.at("cleared").get<std::vector<Vertex>>()) s.cleared.insert(v);
      if (!tr.states.empty()) tr.moves.push_back(move_from_json(rec.at("move"), line_no));
      tr.states.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (tr.states.empty()) throw ParseError(line_no, "empty trace");
  return tr;
}

inline std::vector<MoveStep> load_moves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return read_moves(in);
}

inline void save_moves(const std::vector<MoveStep>& moves, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_parameter, "cannot write " + path);
  write_moves(out, moves);
}

inline void save_trace(const Trace& tr, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_parameter, "cannot write " + path);
  write_trace(out, tr);
}

}  // namespace lionsweep
