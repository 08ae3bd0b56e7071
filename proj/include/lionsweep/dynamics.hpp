#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"

namespace lionsweep {

enum class MotionModel { free, caffeinated, polite };

inline std::string_view to_string(MotionModel m) {
  switch (m) {
    case MotionModel::free: return "free";
    case MotionModel::caffeinated: return "caffeinated";
    case MotionModel::polite: return "polite";
  }
  return "free";
}

inline MotionModel parse_motion_model(std::string_view s) {
  if (s == "free") return MotionModel::free;
  if (s == "caffeinated") return MotionModel::caffeinated;
  if (s == "polite") return MotionModel::polite;
  throw Error(ErrorKind::invalid_parameter, "unknown motion model '" + std::string(s) + "'");
}

// One entry per lion; the index identifies the lion. Several lions may share
// a vertex.
using LionPositions = std::vector<Vertex>;

// Synchronous move for all lions: std::nullopt means the lion stays.
struct MoveStep {
  std::vector<std::optional<Vertex>> actions;

  static MoveStep all_stay(std::size_t k) { return {std::vector<std::optional<Vertex>>(k)}; }

  [[nodiscard]] std::size_t size() const noexcept { return actions.size(); }
  [[nodiscard]] std::size_t movers() const {
    return static_cast<std::size_t>(std::count_if(actions.begin(), actions.end(), [](const auto& a) { return a.has_value(); }));
  }

  // Positions after applying this step to `from`.
  [[nodiscard]] LionPositions apply(const LionPositions& from) const {
    LionPositions out = from;
    for (std::size_t i = 0; i < out.size() && i < actions.size(); ++i) {
      if (actions[i]) out[i] = *actions[i];
    }
    return out;
  }

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

// Move step taking each lion from `from[i]` to `to[i]`; equal entries stay.
inline MoveStep move_between(const LionPositions& from, const LionPositions& to) {
  MoveStep mv = MoveStep::all_stay(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] != to.at(i)) mv.actions[i] = to[i];
  }
  return mv;
}

struct SimState {
  std::size_t time = 0;
  LionPositions lions;
  VertexSet cleared;

  friend bool operator==(const SimState&, const SimState&) = default;
};

enum class ViolationKind { wrong_arity, out_of_range, not_adjacent, must_move, politeness };

inline std::string_view to_string(ViolationKind v) {
  switch (v) {
    case ViolationKind::wrong_arity: return "wrong-arity";
    case ViolationKind::out_of_range: return "out-of-range";
    case ViolationKind::not_adjacent: return "not-adjacent";
    case ViolationKind::must_move: return "must-move";
    case ViolationKind::politeness: return "politeness";
  }
  return "unknown";
}

struct Violation {
  std::optional<std::size_t> lion;  // unset for whole-step violations
  ViolationKind kind;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(v.kind));
    if (v.lion) out += " (lion " + std::to_string(*v.lion) + ")";
  }
  return out;
}

// Raised by run() for the first step that fails validation.
class InvalidMoveError : public Error {
 public:
  InvalidMoveError(std::size_t step_index, std::vector<Violation> violations)
      : Error(ErrorKind::invalid_move, "step " + std::to_string(step_index) + ": " + describe(violations)),
        step_index_(step_index),
        violations_(std::move(violations)) {}

  [[nodiscard]] std::size_t step_index() const noexcept { return step_index_; }
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::size_t step_index_;
  std::vector<Violation> violations_;
};

inline SimState initial_state(const Graph& g, const LionPositions& lions) {
  SimState s{0, lions, VertexSet(g.vertex_count())};
  for (Vertex v : lions) {
    if (v >= g.vertex_count()) throw Error(ErrorKind::invalid_lions, "lion at missing vertex " + std::to_string(v));
    s.cleared.insert(v);
  }
  return s;
}

// Checks adjacency of every move plus the motion-model constraint. Never
// throws; an empty result means the step is legal.
inline std::vector<Violation> validate_moves(const Graph& g, MotionModel model, const SimState& state,
                                             const MoveStep& mv) {
  std::vector<Violation> out;
  if (mv.size() != state.lions.size()) {
    out.push_back({std::nullopt, ViolationKind::wrong_arity});
    return out;
  }
  for (std::size_t i = 0; i < mv.size(); ++i) {
    const auto& a = mv.actions[i];
    if (!a) {
      if (model == MotionModel::caffeinated) out.push_back({i, ViolationKind::must_move});
      continue;
    }
    if (*a >= g.vertex_count()) {
      out.push_back({i, ViolationKind::out_of_range});
    } else if (!g.has_edge(state.lions[i], *a)) {
      out.push_back({i, ViolationKind::not_adjacent});
    }
  }
  if (model == MotionModel::polite && mv.movers() > 1) out.push_back({std::nullopt, ViolationKind::politeness});
  return out;
}

// One synchronous update. A cleared vertex v becomes contaminated when no lion
// stands on it afterwards and some neighbor u was contaminated before the
// step, unless a lion traversed the edge uv during the step (either
// direction). Contamination advances one hop per step.
inline SimState step(const Graph& g, const SimState& state, const MoveStep& mv) {
  if (mv.size() != state.lions.size()) throw Error(ErrorKind::invalid_move, "move arity does not match lion count");

  std::vector<Edge> crossed;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (!mv.actions[i]) continue;
    Vertex from = state.lions[i];
    Vertex to = *mv.actions[i];
    if (!g.has_edge(from, to)) {
      throw Error(ErrorKind::invalid_move, "lion " + std::to_string(i) + " cannot move " + std::to_string(from) +
                                               " -> " + std::to_string(to));
    }
    crossed.emplace_back(std::min(from, to), std::max(from, to));
  }
  auto is_crossed = [&](Vertex a, Vertex b) {
    Edge e{std::min(a, b), std::max(a, b)};
    return std::find(crossed.begin(), crossed.end(), e) != crossed.end();
  };

  SimState next{state.time + 1, mv.apply(state.lions), state.cleared};
  VertexSet occupied(g.vertex_count());
  for (Vertex v : next.lions) occupied.insert(v);

  for (Vertex v : state.cleared.members()) {
    if (occupied.contains(v)) continue;
    for (Vertex u : g.neighbors(v)) {
      if (!state.cleared.contains(u) && !is_crossed(u, v)) {
        next.cleared.erase(v);
        break;
      }
    }
  }
  next.cleared |= occupied;
  return next;
}

struct Trace {
  std::vector<SimState> states;  // states[t] is the state at time t
  std::vector<MoveStep> moves;   // moves[t] leads from states[t] to states[t+1]

  [[nodiscard]] const SimState& initial() const { return states.front(); }
  [[nodiscard]] const SimState& final_state() const { return states.back(); }
  [[nodiscard]] std::size_t steps() const noexcept { return moves.size(); }
};

inline Trace run(const Graph& g, MotionModel model, const LionPositions& lions, const std::vector<MoveStep>& moves,
                 bool stop_on_sweep = false) {
  Trace tr;
  tr.states.push_back(initial_state(g, lions));
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (stop_on_sweep && tr.states.back().cleared.size() == n) break;
    auto violations = validate_moves(g, model, tr.states.back(), moves[i]);
    if (!violations.empty()) throw InvalidMoveError(i, std::move(violations));
    tr.states.push_back(step(g, tr.states.back(), moves[i]));
    tr.moves.push_back(moves[i]);
  }
  return tr;
}

// First time at which every vertex is cleared.
inline std::optional<std::size_t> is_swept(const Trace& tr) {
  for (const auto& s : tr.states) {
    if (s.cleared.size() == s.cleared.universe()) return s.time;
  }
  return std::nullopt;
}

// True when no cleared vertex is lost between consecutive states from index
// `from` on.
inline bool is_monotone(const Trace& tr, std::size_t from = 0) {
  for (std::size_t t = from; t + 1 < tr.states.size(); ++t) {
    if (!tr.states[t].cleared.is_subset_of(tr.states[t + 1].cleared)) return false;
  }
  return true;
}

}  // namespace lionsweep
