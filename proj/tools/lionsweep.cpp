// lionsweep: command-line front end for the lions-and-contamination toolkit.
//
// Exit codes: 0 success / cleared, 10 negative result (not swept,
// impossible), 20 unknown (search limit), 30 conjecture violation found,
// 40 resource limit, 1 usage or input errors, 2 invalid lions or moves.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lionsweep/lionsweep.hpp"

namespace ls = lionsweep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNegative = 10;
constexpr int kExitUnknown = 20;
constexpr int kExitConjecture = 30;
constexpr int kExitResource = 40;

std::string join(const std::vector<ls::Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::size_t default_max_states() {
  if (const char* env = std::getenv("LIONSWEEP_MAX_STATES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed LIONSWEEP_MAX_STATES='" << env << "'\n";
    }
  }
  return ls::SearchLimits{}.max_states;
}

// Writes to `path`, or to stdout when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ls::Error(ls::ErrorKind::invalid_parameter, "cannot write " + path);
  fn(out);
}

int exit_code_for(const ls::Error& e) {
  switch (e.kind()) {
    case ls::ErrorKind::resource_limit: return kExitResource;
    case ls::ErrorKind::invalid_move:
    case ls::ErrorKind::invalid_lions: return kExitInvalid;
    default: return kExitUsage;
  }
}

struct GraphArgs {
  std::string family;
  int n = 0;
  std::optional<int> l;
  int k = 0;
  std::string out;
};

int cmd_graph(const GraphArgs& a) {
  ls::Graph g;
  if (a.family == "square") {
    g = ls::build_square_grid(a.n);
  } else if (a.family == "tri") {
    g = ls::build_tri_lattice(a.n, a.l.value_or(a.n));
  } else if (a.family == "triangle") {
    g = ls::build_triangle(a.n);
  } else if (a.family == "circulant") {
    g = ls::build_circulant(a.n, a.k);
  } else if (a.family == "complete") {
    g = ls::build_complete(a.n);
  } else {
    throw ls::Error(ls::ErrorKind::invalid_parameter, "unknown family '" + a.family + "'");
  }
  if (!a.out.empty()) ls::save_graph(g, a.out);
  std::cout << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << '\n';
  if (a.out.empty()) ls::write_graph(std::cout, g);
  return kExitOk;
}

struct SimulateArgs {
  std::string graph;
  std::string model = "free";
  std::vector<ls::Vertex> lions;
  std::string moves;
  std::string trace_out;
  bool stop_on_sweep = false;
};

int cmd_simulate(const SimulateArgs& a) {
  auto g = ls::load_graph(a.graph);
  auto moves = ls::load_moves(a.moves);
  ls::Trace tr;
  try {
    tr = ls::run(g, ls::parse_motion_model(a.model), a.lions, moves, a.stop_on_sweep);
  } catch (const ls::InvalidMoveError& e) {
    std::cerr << "invalid move at step " << e.step_index() << ": " << ls::describe(e.violations()) << '\n';
    return kExitInvalid;
  }
  if (!a.trace_out.empty()) ls::save_trace(tr, a.trace_out);
  std::cout << "steps " << tr.steps() << ", final cleared " << tr.final_state().cleared.size() << "/"
            << g.vertex_count() << '\n';
  if (auto t = ls::is_swept(tr)) {
    std::cout << "swept at t = " << *t << '\n';
    return kExitOk;
  }
  std::cout << "not swept\n";
  return kExitNegative;
}

struct StrategyArgs {
  std::string kind;
  int n = 0;
  int l = 0;
  std::vector<ls::Vertex> lions;
  std::size_t steps = 0;
  std::string out;
  std::string graph_out;
};

int cmd_strategy(const StrategyArgs& a) {
  ls::SweepPlan plan;
  if (a.kind == "row") {
    auto starts = a.lions.empty() ? ls::LionPositions(static_cast<std::size_t>(a.n), 0) : a.lions;
    plan = ls::row_sweep_moves(a.n, a.l, starts);
  } else if (a.kind == "wall") {
    auto starts =
        a.lions.empty() ? ls::LionPositions(static_cast<std::size_t>(ls::caffeinated_lion_count(a.n)), 0) : a.lions;
    plan = ls::caffeinated_wall_moves(a.n, a.l, starts);
  } else if (a.kind == "naive") {
    plan = ls::naive_caffeinated_column_moves(a.n, a.l, a.steps == 0 ? std::size_t(4) * a.n * a.l : a.steps);
  } else {
    throw ls::Error(ls::ErrorKind::invalid_parameter, "unknown strategy '" + a.kind + "'");
  }
  if (!a.graph_out.empty()) ls::save_graph(ls::build_tri_lattice(a.n, a.l), a.graph_out);
  std::cerr << "lions " << join(plan.starts) << "\nsteps " << plan.moves.size() << " (formation "
            << plan.formation_steps << ")\n";
  emit(a.out, [&](std::ostream& os) { ls::write_moves(os, plan.moves); });
  return kExitOk;
}

int cmd_verify(const SimulateArgs& a) {
  auto g = ls::load_graph(a.graph);
  auto moves = ls::load_moves(a.moves);
  ls::Trace tr;
  try {
    tr = ls::run(g, ls::parse_motion_model(a.model), a.lions, moves);
  } catch (const ls::InvalidMoveError& e) {
    std::cerr << "invalid move at step " << e.step_index() << ": " << ls::describe(e.violations()) << '\n';
    return kExitInvalid;
  }
  auto report = ls::verify_lemma_bounds(g, tr, a.lions.size());
  auto swept = ls::is_swept(tr);
  std::cout << "steps " << tr.steps() << '\n'
            << "swept " << (swept ? "t = " + std::to_string(*swept) : std::string("no")) << '\n'
            << "monotone " << (ls::is_monotone(tr) ? "yes" : "no") << '\n'
            << "lemma violations " << report.violations.size() << " over " << report.steps_checked << " steps\n";
  if (!report.ok()) return kExitInvalid;
  return swept ? kExitOk : kExitNegative;
}

struct RandomArgs {
  std::size_t traces = 0;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 12;
  std::size_t max_lions = 3;
  std::size_t steps = 30;
};

int cmd_verify_random(const RandomArgs& a, const std::string& model_name) {
  auto model = ls::parse_motion_model(model_name);
  if (a.max_vertices < 2 || a.max_lions < 1) {
    throw ls::Error(ls::ErrorKind::invalid_parameter, "--max-vertices must be >= 2 and --max-lions >= 1");
  }
  ls::Rng rng(a.seed);
  std::size_t violations = 0;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < a.traces; ++i) {
    std::uniform_int_distribution<std::size_t> nv(2, a.max_vertices);
    std::uniform_int_distribution<std::size_t> kd(1, a.max_lions);
    std::uniform_real_distribution<double> pd(0.0, 0.5);
    auto g = ls::random_connected_graph(nv(rng), pd(rng), rng);
    auto k = kd(rng);
    auto lions = ls::random_positions(g, k, rng);
    auto tr = ls::run(g, model, lions, ls::random_moves(g, model, lions, a.steps, rng));
    auto rep = ls::verify_lemma_bounds(g, tr, k);
    violations += rep.violations.size();
    steps += rep.steps_checked;
  }
  std::cout << violations << " lemma violations over " << a.traces << " traces (" << steps << " steps, seed "
            << a.seed << ")\n";
  return violations == 0 ? kExitOk : kExitInvalid;
}

struct IsoArgs {
  std::string graph;
  std::size_t lo = 0;
  std::size_t hi = 64;
  int n = 3;
  std::string direction = "down-left";
  std::string kind = "row";
  std::size_t count = 0;
  std::size_t limit = ls::kDefaultEnumerationLimit;
  unsigned jobs = 1;
};

ls::FallDirection parse_direction(const std::string& s) {
  if (s == "down-left") return ls::FallDirection::down_left;
  if (s == "down-right") return ls::FallDirection::down_right;
  throw ls::Error(ls::ErrorKind::invalid_parameter, "direction must be down-left or down-right");
}

int cmd_iso_profile(const IsoArgs& a) {
  auto g = ls::load_graph(a.graph);
  auto profile = ls::iso_profile(g, a.lo, a.hi, a.limit, a.jobs);
  std::cout << "size,min_boundary,witness\n";
  for (const auto& e : profile.entries) {
    std::cout << e.size << ',' << e.min_boundary << ",\"" << join(e.witness.members()) << "\"\n";
  }
  return kExitOk;
}

int cmd_falldown_check(const IsoArgs& a) {
  auto dir = parse_direction(a.direction);
  auto check = ls::falldown_check(a.n, dir, a.limit, a.jobs);
  std::cout << "direction " << ls::to_string(dir) << '\n'
            << "boundary increases in square grid: " << check.square_increases << '\n'
            << "boundary increases in triangular lattice: " << check.tri_increases << '\n'
            << "boundary set mismatches: " << check.boundary_mismatches << '\n';
  for (const auto& [counts, w] : check.mismatch_examples) {
    std::cout << "  mismatch " << counts.first << " vs " << counts.second << ": S = [" << join(w.original.members())
              << "], T(S) = [" << join(w.image.members()) << "]\n";
  }
  std::cout << check.violations() << " violations over " << check.subsets << " subsets\n";
  return check.violations() == 0 ? kExitOk : kExitNegative;
}

int cmd_counterexample(const IsoArgs& a) {
  auto w = ls::falldown_counterexample_search(a.n, parse_direction(a.direction), a.limit);
  if (!w) {
    std::cout << "no counterexample\n";
    return kExitNegative;
  }
  std::cout << "S = [" << join(w->original.members()) << "]\nT(S) = [" << join(w->image.members())
            << "]\nboundary in square grid " << w->square_boundary << ", in triangular lattice " << w->tri_boundary
            << '\n';
  return kExitOk;
}

int cmd_packing(const IsoArgs& a) {
  ls::PackingKind kind;
  if (a.kind == "row") {
    kind = ls::PackingKind::row;
  } else if (a.kind == "ice_cream" || a.kind == "icecream") {
    kind = ls::PackingKind::ice_cream;
  } else {
    throw ls::Error(ls::ErrorKind::invalid_parameter, "packing kind must be row or ice_cream");
  }
  auto s = ls::packing(a.n, kind, a.count);
  auto g = ls::build_triangle(a.n);
  std::cout << "vertices [" << join(s.members()) << "]\ncells";
  for (auto v : s.members()) std::cout << " (" << g.coord(v).row << "," << g.coord(v).col << ")";
  std::cout << "\nboundary " << ls::boundary(g, s).size() << '\n';
  return kExitOk;
}

int cmd_cheeger(const std::string& path, std::size_t limit, unsigned jobs) {
  auto g = ls::load_graph(path);
  auto res = ls::cheeger_constant(g, limit, jobs);
  std::cout << "g = " << res.value << ", witness = [" << join(res.witness.members())
            << "], excluded_polite <= " << ls::polite_lion_bound(res.value, g.vertex_count())
            << ", excluded_free <= " << ls::lion_bound(res.value, g.vertex_count()) << '\n';
  return kExitOk;
}

struct SearchArgs {
  std::string graph;
  std::string model = "free";
  std::size_t k = 1;
  bool min = false;
  std::size_t kmax = 4;
  std::size_t max_states = 0;
  std::size_t max_depth = ls::SearchLimits{}.max_depth;
  bool dominance = false;
  std::string trace_out;
};

int cmd_search(const SearchArgs& a) {
  auto g = ls::load_graph(a.graph);
  auto model = ls::parse_motion_model(a.model);
  ls::SearchLimits limits{a.max_states == 0 ? default_max_states() : a.max_states, a.max_depth, a.dominance};
  if (limits.max_states == 0 || limits.max_depth == 0) {
    throw ls::Error(ls::ErrorKind::invalid_parameter, "limits must be positive");
  }

  ls::SearchResult result;
  ls::Verdict verdict;
  if (a.min) {
    auto m = ls::min_lions(g, model, a.kmax, limits);
    verdict = m.verdict;
    result = m.search;
    if (m.lions) {
      std::cout << "k* = " << *m.lions << '\n';
    } else if (verdict == ls::Verdict::impossible) {
      std::cout << "no k <= " << a.kmax << " suffices\n";
    }
  } else {
    result = ls::can_clear(g, a.k, model, limits);
    verdict = result.verdict;
  }
  auto stats = result.stats();
  std::cout << "verdict " << ls::to_string(verdict) << '\n'
            << "explored states " << stats.explored_states << '\n'
            << "peak frontier " << stats.peak_frontier << '\n';
  if (verdict == ls::Verdict::unknown) std::cout << "limit: " << result.limit_note() << '\n';
  if (const auto& w = result.witness(); w && verdict == ls::Verdict::cleared) {
    std::cout << "witness length " << w->steps() << '\n';
    if (!a.trace_out.empty()) ls::save_trace(*w, a.trace_out);
  }
  switch (verdict) {
    case ls::Verdict::cleared: return kExitOk;
    case ls::Verdict::impossible: return kExitNegative;
    case ls::Verdict::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int cmd_conjecture(int n, const std::string& out, std::size_t limit, unsigned jobs) {
  auto rep = ls::conjecture_report(n, limit, jobs);
  emit(out, [&](std::ostream& os) {
    os << "# n=" << rep.n << " vertices=" << ls::triangular(static_cast<std::uint64_t>(n))
       << " boundary_threshold=" << rep.boundary_threshold << " lion_threshold=" << rep.lion_threshold
       << " window_size=" << rep.window_size << " window_min_boundary=" << rep.window_min_boundary
       << " window_meets_threshold=" << (rep.window_meets_threshold ? "true" : "false")
       << " violations=" << rep.violations() << '\n';
    ls::write_conjecture_csv(os, rep);
  });
  return rep.violations() == 0 ? kExitOk : kExitConjecture;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lionsweep: lions-and-contamination pursuit-evasion toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "build a graph family and write its edge list");
  graph->add_option("family", graph_args.family, "square | tri | triangle | circulant | complete")->required();
  graph->add_option("-n", graph_args.n, "size parameter")->required();
  graph->add_option("-l", graph_args.l, "length of the triangular lattice (default n)");
  graph->add_option("-k", graph_args.k, "circulant chord length");
  graph->add_option("-o,--out", graph_args.out, "output edge-list file");
  graph->callback([&] { action = [&] { return cmd_graph(graph_args); }; });

  SimulateArgs sim_args;
  auto add_sim_options = [](CLI::App* cmd, SimulateArgs& a, bool required) {
    auto* graph_opt = cmd->add_option("graph", a.graph, "edge-list file");
    cmd->add_option("--model", a.model, "free | caffeinated | polite");
    auto* lions_opt = cmd->add_option("--lions", a.lions, "comma-separated start vertices")->delimiter(',');
    auto* moves_opt = cmd->add_option("--moves", a.moves, "moves file");
    if (required) {
      graph_opt->required();
      lions_opt->required();
      moves_opt->required();
    }
  };
  auto* simulate = app.add_subcommand("simulate", "replay a move file and report the sweep");
  add_sim_options(simulate, sim_args, true);
  simulate->add_option("--trace", sim_args.trace_out, "write the trace as JSON lines");
  simulate->add_flag("--stop-on-sweep", sim_args.stop_on_sweep, "stop at the first fully cleared state");
  simulate->callback([&] { action = [&] { return cmd_simulate(sim_args); }; });

  SimulateArgs verify_args;
  auto* verify = app.add_subcommand("verify", "replay a move file and check the growth and stall bounds");
  add_sim_options(verify, verify_args, false);
  RandomArgs random_args;
  verify->add_option("--random", random_args.traces, "check N seeded random traces instead of a move file");
  verify->add_option("--seed", random_args.seed, "seed for --random");
  verify->add_option("--max-vertices", random_args.max_vertices, "largest random graph");
  verify->add_option("--max-lions", random_args.max_lions, "largest random lion count");
  verify->add_option("--steps", random_args.steps, "steps per random trace");
  verify->callback([&] {
    action = [&] {
      if (random_args.traces > 0) return cmd_verify_random(random_args, verify_args.model);
      if (verify_args.graph.empty() || verify_args.moves.empty()) {
        throw ls::Error(ls::ErrorKind::invalid_parameter, "verify needs a graph, --lions and --moves, or --random");
      }
      return cmd_verify(verify_args);
    };
  });

  StrategyArgs strat_args;
  auto* strategy = app.add_subcommand("strategy", "generate a sweep on the triangular lattice R_{n,l}");
  strategy->add_option("kind", strat_args.kind, "row | wall | naive")->required();
  strategy->add_option("-n", strat_args.n, "rows")->required();
  strategy->add_option("-l", strat_args.l, "columns")->required();
  strategy->add_option("--lions", strat_args.lions, "comma-separated start vertices")->delimiter(',');
  strategy->add_option("--steps", strat_args.steps, "length of the naive sweep (default 4nl)");
  strategy->add_option("-o,--out", strat_args.out, "moves file (default stdout)");
  strategy->add_option("--graph-out", strat_args.graph_out, "also write R_{n,l} as an edge list");
  strategy->callback([&] { action = [&] { return cmd_strategy(strat_args); }; });

  IsoArgs iso_args;
  auto* iso = app.add_subcommand("isoperimetry", "isoperimetric profiles, fall-down checks and packings");
  iso->require_subcommand(1);
  auto* profile = iso->add_subcommand("profile", "exact minimum boundary per subset size");
  profile->add_option("graph", iso_args.graph)->required();
  profile->add_option("--lo", iso_args.lo);
  profile->add_option("--hi", iso_args.hi);
  profile->callback([&] { action = [&] { return cmd_iso_profile(iso_args); }; });
  auto* fcheck = iso->add_subcommand("falldown-check", "exhaustive fall-down monotonicity and boundary check");
  fcheck->add_option("-n", iso_args.n)->required();
  fcheck->add_option("--direction", iso_args.direction, "down-left | down-right");
  fcheck->callback([&] { action = [&] { return cmd_falldown_check(iso_args); }; });
  auto* cex = iso->add_subcommand("counterexample", "first set whose fall-down image has differing boundaries");
  cex->add_option("-n", iso_args.n)->required();
  cex->add_option("--direction", iso_args.direction, "down-left | down-right");
  cex->callback([&] { action = [&] { return cmd_counterexample(iso_args); }; });
  auto* pack = iso->add_subcommand("packing", "row or ice-cream-cone packing of the triangle P_n");
  pack->add_option("-n", iso_args.n)->required();
  pack->add_option("--kind", iso_args.kind, "row | ice_cream");
  pack->add_option("--count", iso_args.count)->required();
  pack->callback([&] { action = [&] { return cmd_packing(iso_args); }; });
  for (auto* sub : {profile, fcheck, cex}) {
    sub->add_option("--limit", iso_args.limit, "maximum vertices for subset enumeration");
    sub->add_option("--jobs", iso_args.jobs, "worker threads");
  }

  std::string cheeger_graph;
  std::size_t cheeger_limit = ls::kDefaultEnumerationLimit;
  unsigned cheeger_jobs = 1;
  auto* cheeger = app.add_subcommand("cheeger", "exact Cheeger constant and lion lower bounds");
  cheeger->add_option("graph", cheeger_graph)->required();
  cheeger->add_option("--limit", cheeger_limit);
  cheeger->add_option("--jobs", cheeger_jobs);
  cheeger->callback([&] { action = [&] { return cmd_cheeger(cheeger_graph, cheeger_limit, cheeger_jobs); }; });

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "exhaustive search for a sweep with k lions");
  search->add_option("graph", search_args.graph)->required();
  search->add_option("--model", search_args.model, "free | caffeinated | polite");
  auto* k_opt = search->add_option("-k", search_args.k, "number of lions");
  auto* min_flag = search->add_flag("--min", search_args.min, "find the minimum number of lions");
  k_opt->excludes(min_flag);
  search->add_option("--kmax", search_args.kmax, "largest k tried with --min");
  search->add_option("--max-states", search_args.max_states, "state limit (env LIONSWEEP_MAX_STATES)");
  search->add_option("--max-depth", search_args.max_depth, "depth limit");
  search->add_flag("--dominance", search_args.dominance, "prune states dominated by an explored state");
  search->add_option("--trace", search_args.trace_out, "write the witness trace when cleared");
  search->callback([&] { action = [&] { return cmd_search(search_args); }; });

  int conj_n = 0;
  std::string conj_out;
  std::size_t conj_limit = ls::kDefaultEnumerationLimit;
  unsigned conj_jobs = 1;
  auto* conjecture = app.add_subcommand("conjecture", "packing conjecture report on the triangle P_n (CSV)");
  conjecture->add_option("-n", conj_n)->required();
  conjecture->add_option("-o,--out", conj_out);
  conjecture->add_option("--limit", conj_limit);
  conjecture->add_option("--jobs", conj_jobs);
  conjecture->callback([&] { action = [&] { return cmd_conjecture(conj_n, conj_out, conj_limit, conj_jobs); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const ls::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
