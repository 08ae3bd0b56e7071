#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lionsweep/dynamics.hpp"
#include "lionsweep/error.hpp"
#include "lionsweep/graph.hpp"
#include "lionsweep/subsets.hpp"

namespace lionsweep {

inline constexpr std::size_t kMaxSearchLions = 8;

struct SearchLimits {
  std::size_t max_states = 10'000'000;
  std::size_t max_depth = 100'000;
  bool dominance_pruning = false;
};

enum class Verdict { cleared, impossible, unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::cleared: return "Cleared";
    case Verdict::impossible: return "Impossible";
    case Verdict::unknown: return "Unknown";
  }
  return "Unknown";
}

struct SearchStats {
  std::size_t explored_states = 0;
  std::size_t peak_frontier = 0;
  std::size_t depth = 0;
};

// Outcome of exhaustive search from one start configuration.
struct StartOutcome {
  LionPositions start;
  Verdict verdict = Verdict::unknown;
  std::optional<Trace> witness;
  SearchStats stats;
  std::string limit_note;
};

// Worst case over all starts the policy requires: Impossible if any start is
// Impossible, otherwise Unknown if any start hit a limit, otherwise Cleared.
struct SearchResult {
  Verdict verdict = Verdict::unknown;
  std::vector<StartOutcome> per_start;

  [[nodiscard]] const std::optional<Trace>& witness() const {
    static const std::optional<Trace> none;
    for (const auto& s : per_start) {
      if (s.witness) return s.witness;
    }
    return none;
  }
  [[nodiscard]] std::string limit_note() const {
    for (const auto& s : per_start) {
      if (!s.limit_note.empty()) return s.limit_note;
    }
    return {};
  }
  [[nodiscard]] SearchStats stats() const {
    SearchStats out;
    for (const auto& s : per_start) {
      out.explored_states += s.stats.explored_states;
      out.peak_frontier = std::max(out.peak_frontier, s.stats.peak_frontier);
      out.depth = std::max(out.depth, s.stats.depth);
    }
    return out;
  }
};

namespace detail {

// (sorted lion positions, cleared set) packed into two words: one byte per
// lion position, one bit per vertex. Byte value 0xFF never names a vertex, so
// an all-ones position word marks empty hash slots.
struct StateKey {
  std::uint64_t lions = 0;
  Mask cleared = 0;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

inline std::uint64_t pack_lions(LionPositions pos) {
  std::sort(pos.begin(), pos.end());
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) out |= static_cast<std::uint64_t>(pos[i]) << (8 * i);
  return out;
}

inline LionPositions unpack_lions(std::uint64_t packed, std::size_t k) {
  LionPositions out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<Vertex>((packed >> (8 * i)) & 0xFFU);
  return out;
}

inline std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Open-addressing set of state indices; keys live in the caller's state
// table, so each slot costs four bytes.
class VisitedSet {
 public:
  explicit VisitedSet(const std::vector<StateKey>& keys) : keys_(keys), slots_(1024, kEmpty) {}

  // Returns true if the key was absent (the caller then appends it to the
  // state table at index `next_index`).
  bool insert(const StateKey& key, std::uint32_t next_index) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == kEmpty) {
        slots_[i] = next_index;
        ++count_;
        return true;
      }
      if (keys_[slots_[i]] == key) return false;
    }
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFU;

  static std::size_t hash(const StateKey& k) { return mix(k.lions * 0x9E3779B97F4A7C15ULL ^ mix(k.cleared)); }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    std::size_t mask = slots_.size() - 1;
    for (auto idx : old) {
      if (idx == kEmpty) continue;
      std::size_t i = hash(keys_[idx]) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = idx;
    }
  }

  const std::vector<StateKey>& keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

// Cleared sets seen per lion placement; a new set is dominated when an
// earlier one with the same placement contains it.
class DominanceIndex {
 public:
  bool dominated(const StateKey& key) const {
    auto it = seen_.find(key.lions);
    if (it == seen_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](Mask m) { return (key.cleared & ~m) == 0; });
  }
  void add(const StateKey& key) {
    auto& list = seen_[key.lions];
    std::erase_if(list, [&](Mask m) { return (m & ~key.cleared) == 0; });
    list.push_back(key.cleared);
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<Mask>> seen_;
};

// Bitmask form of dynamics::step for graphs of at most 64 vertices.
class FastStepper {
 public:
  explicit FastStepper(const Graph& g) : nbr_(g) {}

  [[nodiscard]] const NeighborMasks& masks() const noexcept { return nbr_; }

  [[nodiscard]] Mask step(const LionPositions& from, const LionPositions& to, Mask cleared) const {
    Mask occupied = 0;
    for (Vertex v : to) occupied |= Mask{1} << v;
    const Mask contaminated = nbr_.all() & ~cleared;
    Mask exposed = cleared & ~occupied & nbr_.neighborhood(contaminated);
    Mask lost = exposed;
    // Vertices at the end of a traversed edge need the exact test.
    Mask touched = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (from[i] != to[i]) touched |= (Mask{1} << from[i]) | (Mask{1} << to[i]);
    }
    for (Mask m = exposed & touched; m != 0; m &= m - 1) {
      auto v = static_cast<Vertex>(std::countr_zero(m));
      Mask sources = nbr_.of(v) & contaminated;
      for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] == v && to[i] != v) sources &= ~(Mask{1} << to[i]);
        if (to[i] == v && from[i] != v) sources &= ~(Mask{1} << from[i]);
      }
      if (sources == 0) lost &= ~(Mask{1} << v);
    }
    return (cleared & ~lost) | occupied;
  }

 private:
  NeighborMasks nbr_;
};

// Calls visit(targets) for every legal joint move of the lions at `pos`, in a
// fixed order: lion 0 varies slowest, staying before moving, neighbours in
// ascending order.
template <class Visit>
void for_each_move(const Graph& g, MotionModel model, const LionPositions& pos, Visit&& visit) {
  const std::size_t k = pos.size();
  LionPositions to = pos;
  if (model == MotionModel::polite) {
    visit(to);
    for (std::size_t i = 0; i < k; ++i) {
      for (Vertex u : g.neighbors(pos[i])) {
        to[i] = u;
        visit(to);
      }
      to[i] = pos[i];
    }
    return;
  }
  const bool may_stay = model == MotionModel::free;
  // Choice index per lion: 0 = stay when allowed, else neighbour index.
  std::vector<std::size_t> choice(k, 0);
  auto options = [&](std::size_t i) { return g.degree(pos[i]) + (may_stay ? 1 : 0); };
  for (std::size_t i = 0; i < k; ++i) {
    if (options(i) == 0) return;  // a caffeinated lion on an isolated vertex cannot move
  }
  auto target = [&](std::size_t i) {
    if (may_stay) return choice[i] == 0 ? pos[i] : g.neighbors(pos[i])[choice[i] - 1];
    return g.neighbors(pos[i])[choice[i]];
  };
  while (true) {
    for (std::size_t i = 0; i < k; ++i) to[i] = target(i);
    visit(to);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++choice[i] < options(i)) break;
      choice[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

inline StartOutcome search_from(const Graph& g, MotionModel model, const LionPositions& start,
                                const SearchLimits& limits) {
  FastStepper stepper(g);
  const Mask all = stepper.masks().all();
  const std::size_t k = start.size();

  StartOutcome out;
  out.start = start;

  Mask c0 = 0;
  for (Vertex v : start) c0 |= Mask{1} << v;

  std::vector<StateKey> keys;
  std::vector<std::uint32_t> parent;
  VisitedSet visited(keys);
  DominanceIndex dominance;

  auto finish_cleared = [&](std::uint32_t goal) {
    std::vector<std::uint32_t> path;
    for (std::uint32_t i = goal;; i = parent[i]) {
      path.push_back(i);
      if (i == 0) break;
    }
    std::reverse(path.begin(), path.end());
    // Replay with lion identities, picking the first joint move that lands on
    // each recorded state.
    Trace tr;
    tr.states.push_back(initial_state(g, start));
    LionPositions cur = start;
    Mask cleared = c0;
    for (std::size_t j = 1; j < path.size(); ++j) {
      const StateKey& want = keys[path[j]];
      std::optional<LionPositions> chosen;
      for_each_move(g, model, cur, [&](const LionPositions& to) {
        if (chosen) return;
        if (pack_lions(to) == want.lions && stepper.step(cur, to, cleared) == want.cleared) chosen = to;
      });
      MoveStep mv = move_between(cur, *chosen);
      tr.states.push_back(step(g, tr.states.back(), mv));
      tr.moves.push_back(std::move(mv));
      cur = *chosen;
      cleared = want.cleared;
    }
    out.verdict = Verdict::cleared;
    out.witness = std::move(tr);
  };

  keys.push_back({pack_lions(start), c0});
  parent.push_back(0);
  visited.insert(keys[0], 0);
  if (limits.dominance_pruning) dominance.add(keys[0]);
  out.stats.explored_states = 1;
  if (c0 == all) {
    finish_cleared(0);
    return out;
  }

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  std::size_t depth = 0;
  bool truncated = false;
  while (level_begin < level_end) {
    out.stats.peak_frontier = std::max(out.stats.peak_frontier, level_end - level_begin);
    if (depth >= limits.max_depth) {
      truncated = true;
      out.limit_note = "max depth " + std::to_string(limits.max_depth) + " reached";
      break;
    }
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      const StateKey parent_key = keys[idx];
      const LionPositions pos = unpack_lions(parent_key.lions, k);
      std::optional<std::uint32_t> goal;
      bool overflow = false;
      for_each_move(g, model, pos, [&](const LionPositions& to) {
        if (goal || overflow) return;
        StateKey child{pack_lions(to), stepper.step(pos, to, parent_key.cleared)};
        if (limits.dominance_pruning && dominance.dominated(child)) return;
        auto next_index = static_cast<std::uint32_t>(keys.size());
        if (!visited.insert(child, next_index)) return;
        keys.push_back(child);
        parent.push_back(static_cast<std::uint32_t>(idx));
        if (limits.dominance_pruning) dominance.add(child);
        if (child.cleared == all) goal = next_index;
        if (keys.size() > limits.max_states) overflow = true;
      });
      out.stats.explored_states = keys.size();
      if (goal) {
        out.stats.depth = depth + 1;
        finish_cleared(*goal);
        return out;
      }
      if (overflow) {
        out.verdict = Verdict::unknown;
        out.limit_note = "state limit " + std::to_string(limits.max_states) + " exceeded";
        out.stats.depth = depth;
        return out;
      }
    }
    level_begin = level_end;
    level_end = keys.size();
    ++depth;
  }
  out.stats.depth = depth;
  out.verdict = truncated ? Verdict::unknown : Verdict::impossible;
  return out;
}

}  // namespace detail

// Starts that must all succeed for "k lions can sweep g". One canonical start
// (every lion on vertex 0) stands for all starts on a connected graph, except
// for caffeinated lions on a bipartite graph, where each count of lions on
// the colour class of vertex 0 is its own case.
inline std::vector<LionPositions> default_starts(const Graph& g, std::size_t k, MotionModel model) {
  if (k == 0) return {LionPositions{}};
  if (!is_connected(g)) {
    throw Error(ErrorKind::invalid_parameter, "disconnected graph: pass explicit lion starts");
  }
  if (model == MotionModel::caffeinated && g.vertex_count() > 1 && !has_odd_cycle(g)) {
    Vertex other = g.neighbors(0).front();
    std::vector<LionPositions> starts;
    for (std::size_t on_zero = k + 1; on_zero-- > 0;) {
      LionPositions s(on_zero, 0);
      s.resize(k, other);
      starts.push_back(std::move(s));
    }
    return starts;
  }
  return {LionPositions(k, 0)};
}

// Breadth-first reachability over (lion multiset, cleared set) states.
// Limits produce Unknown, never Impossible.
inline SearchResult can_clear(const Graph& g, std::size_t k, MotionModel model, const SearchLimits& limits = {},
                              std::optional<std::vector<LionPositions>> starts = std::nullopt) {
  if (g.vertex_count() > 64) throw Error(ErrorKind::resource_limit, "search supports at most 64 vertices");
  if (k > kMaxSearchLions) {
    throw Error(ErrorKind::resource_limit, "search supports at most " + std::to_string(kMaxSearchLions) + " lions");
  }
  if (limits.max_states == 0 || limits.max_depth == 0) {
    throw Error(ErrorKind::invalid_parameter, "search limits must be positive");
  }
  auto start_list = starts ? *starts : default_starts(g, k, model);

  SearchResult result;
  bool any_unknown = false;
  bool any_impossible = false;
  for (const auto& s : start_list) {
    if (s.size() != k) throw Error(ErrorKind::invalid_lions, "start does not have k lions");
    for (Vertex v : s) {
      if (v >= g.vertex_count()) throw Error(ErrorKind::invalid_lions, "lion at missing vertex");
    }
    result.per_start.push_back(detail::search_from(g, model, s, limits));
    any_unknown |= result.per_start.back().verdict == Verdict::unknown;
    any_impossible |= result.per_start.back().verdict == Verdict::impossible;
    if (any_impossible) break;
  }
  result.verdict = any_impossible ? Verdict::impossible : any_unknown ? Verdict::unknown : Verdict::cleared;
  return result;
}

struct MinLionsResult {
  // Cleared: `lions` holds k*. Impossible: nothing up to k_max works.
  // Unknown: some k below the answer hit a limit.
  Verdict verdict = Verdict::unknown;
  std::optional<std::size_t> lions;
  SearchResult search;  // result at k* (or at the deciding k)
};

inline MinLionsResult min_lions(const Graph& g, MotionModel model, std::size_t k_max, const SearchLimits& limits = {}) {
  MinLionsResult out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    SearchResult r = can_clear(g, k, model, limits);
    if (r.verdict == Verdict::impossible) continue;
    out.verdict = r.verdict;
    if (r.verdict == Verdict::cleared) out.lions = k;
    out.search = std::move(r);
    return out;
  }
  out.verdict = Verdict::impossible;
  return out;
}

// Checks two facts that hold for every trace with k lions:
//   growth:  |C(t+1)| - |C(t)| <= k (and <= 1 when at most one lion moves)
//   stall:   |dC(t)| >= 2k implies |C(t+1)| <= |C(t)|
struct LemmaViolation {
  std::size_t time = 0;
  enum class Kind { growth, polite_growth, stall } kind = Kind::growth;
};

struct LemmaReport {
  std::size_t steps_checked = 0;
  std::vector<LemmaViolation> violations;
  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

inline LemmaReport verify_lemma_bounds(const Graph& g, const Trace& tr, std::size_t k) {
  LemmaReport rep;
  for (std::size_t t = 0; t + 1 < tr.states.size(); ++t) {
    const auto before = static_cast<std::int64_t>(tr.states[t].cleared.size());
    const auto after = static_cast<std::int64_t>(tr.states[t + 1].cleared.size());
    const auto growth = after - before;
    ++rep.steps_checked;
    if (growth > static_cast<std::int64_t>(k)) rep.violations.push_back({t, LemmaViolation::Kind::growth});
    if (t < tr.moves.size() && tr.moves[t].movers() <= 1 && growth > 1) {
      rep.violations.push_back({t, LemmaViolation::Kind::polite_growth});
    }
    if (boundary(g, tr.states[t].cleared).size() >= 2 * k && growth > 0) {
      rep.violations.push_back({t, LemmaViolation::Kind::stall});
    }
  }
  return rep;
}

}  // namespace lionsweep
