// Command-line front end: subcommands over the library's file formats.
// Exit codes: 0 = decided/constructed, 2 = undecided within budget,
// 1 = input or usage error.

#include <cinttypes>
#include <functional>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "subshift/io.hpp"
#include "subshift/threepath.hpp"

using namespace subshift;
using io::json;

namespace {

struct BudgetFlags {
  int max_radius = 6;
  int max_lookahead = 2;
  std::int64_t max_patterns = 1000000;
  std::int64_t max_vertices = 100000;
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
  cmd->add_option("--max-radius", b.max_radius, "emptiness search radius cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-lookahead", b.max_lookahead, "lookahead cap")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-patterns", b.max_patterns, "pattern enumeration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-vertices", b.max_vertices, "vertex exploration cap")
      ->check(CLI::PositiveNumber);
}

SearchBudget to_search_budget(const BudgetFlags& b) {
  SearchBudget s;
  s.max_explored = static_cast<std::size_t>(b.max_vertices);
  return s;
}

json pattern_to_json(const Pattern& p, const GroupSpec& spec) {
  PatternCoding c = coding_of_pattern(p, spec);
  return io::coding_to_json(c);
}

void emit(const std::string& format, const json& j, const std::string& text) {
  if (format == "json")
    std::printf("%s\n", j.dump(2).c_str());
  else
    std::printf("%s\n", text.c_str());
}

// Number of ends of the standard Cayley graph, when known: 0 for finite
// groups, 1, 2, or -1 for infinitely many.
int ends_of(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupSpec::Kind::Lattice:
      return spec.lattice_dim() == 1 ? 2 : 1;
    case GroupSpec::Kind::Free:
      return spec.free_rank() == 1 ? 2 : -1;
    case GroupSpec::Kind::Finite:
      return 0;
    case GroupSpec::Kind::Product: {
      int l = ends_of(spec.left());
      int r = ends_of(spec.right());
      if (l == 0) return r;
      if (r == 0) return l;
      return 1;  // product of two infinite groups
    }
  }
  return -1;
}

// Synthesizes a bi-extensible seed path for a 1- or 2-ended Cayley
// graph, validating it loudly.
std::pair<ThreePath, EndPromise> make_seed(const CayleyGraph& graph, const SearchBudget& budget) {
  int ends = ends_of(graph.spec());
  if (ends != 1 && ends != 2)
    throw Error("transitive translation-like actions require one or two ends");
  ThreePath seed = bi_extensible_visiting(graph, 0, budget);
  EndPromise promise =
      ends == 1 ? EndPromise::one_end()
                : EndPromise::two_ends({seed.verts.begin(), seed.verts.end()});
  auto verdict = is_bi_extensible(graph, seed, promise, budget);
  if (verdict.kind != BiExtensibleVerdict::Kind::Yes)
    throw Error("synthesized seed failed validation: " + verdict.reason);
  if (ends == 2) {
    ConnectivityResult conn =
        connectivity_after_removal(graph, seed.vertex_set(), promise, budget.max_explored);
    if (conn.kind != ConnectivityResult::Kind::NoFiniteComponent || conn.classes.size() != 2)
      throw Error("synthesized seed does not split the two-ended graph");
  }
  return {std::move(seed), std::move(promise)};
}

json path_to_json(const CayleyGraph& graph, const ThreePath& f) {
  json rows = json::array();
  for (std::int64_t i = f.lo; i <= f.hi(); ++i) {
    json row;
    row["index"] = i;
    row["vertex"] = f.at(i);
    row["word"] = graph.spec().word_for(graph.element(f.at(i)));
    rows.push_back(row);
  }
  return rows;
}

void print_path_table(const CayleyGraph& graph, const ThreePath& f) {
  for (std::int64_t i = f.lo; i <= f.hi(); ++i)
    std::printf("%" PRId64 "\t%" PRId64 "\t%s\n", i, f.at(i),
                graph.spec().word_for(graph.element(f.at(i))).c_str());
}

json validation_report(const Graph& g, const ThreePath& f) {
  json rep;
  std::set<Vertex> seen(f.verts.begin(), f.verts.end());
  rep["injective"] = seen.size() == f.verts.size();
  bool jumps_ok = true;
  for (std::size_t i = 0; i + 1 < f.verts.size(); ++i)
    if (!bounded_distance(g, f.verts[i], f.verts[i + 1], 3)) jumps_ok = false;
  rep["jumps_at_most_3"] = jumps_ok;
  rep["domain_lo"] = f.lo;
  rep["domain_hi"] = f.hi();
  rep["size"] = f.verts.size();
  return rep;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"subshifts of finite type on finitely generated groups"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // ---- sft ----
  CLI::App* sft = app.add_subcommand("sft", "SFT presentations and decisions");
  sft->require_subcommand(1);

  struct {
    std::string input, other, output, plus, minus;
    BudgetFlags budget;
    int n = 4, m = 0, cap = 8, relator_budget = 4;
  } opts;

  CLI::App* check_empty_cmd = sft->add_subcommand("check-empty", "emptiness certificate");
  check_empty_cmd->add_option("file", opts.input)->required();
  add_budget_flags(check_empty_cmd, opts.budget);

  CLI::App* fixed_cmd = sft->add_subcommand("fixed-point", "decide fixed points");
  fixed_cmd->add_option("file", opts.input)->required();

  CLI::App* product_cmd = sft->add_subcommand("product", "direct product presentation");
  product_cmd->add_option("left", opts.input)->required();
  product_cmd->add_option("right", opts.other)->required();
  product_cmd->add_option("-o,--output", opts.output)->required();

  CLI::App* union_cmd = sft->add_subcommand("union", "disjoint union presentation");
  union_cmd->add_option("left", opts.input)->required();
  union_cmd->add_option("right", opts.other)->required();
  union_cmd->add_option("-o,--output", opts.output)->required();

  CLI::App* pullback_cmd = sft->add_subcommand("pullback", "pullback to the free group");
  pullback_cmd->add_option("file", opts.input)->required();
  pullback_cmd->add_option("--relator-budget", opts.relator_budget,
                           "identity-word length budget");
  pullback_cmd->add_option("-o,--output", opts.output)->required();

  CLI::App* extfree_cmd = sft->add_subcommand("extend-free", "free extension to a larger group");
  extfree_cmd->add_option("file", opts.input)->required();
  extfree_cmd->add_option("--group", opts.other, "target group spec file")->required();
  extfree_cmd->add_option("-o,--output", opts.output)->required();

  CLI::App* entropy_cmd = sft->add_subcommand("entropy-bound", "box entropy upper bound");
  entropy_cmd->add_option("file", opts.input)->required();
  entropy_cmd->add_option("-n", opts.n, "box side");
  entropy_cmd->add_option("-m", opts.m, "lookahead");
  add_budget_flags(entropy_cmd, opts.budget);

  CLI::App* zdecide_cmd = sft->add_subcommand("z-decide", "exact decision over Z");
  zdecide_cmd->add_option("file", opts.input)->required();
  zdecide_cmd->add_option("--language", opts.n, "print L_n for this radius")->default_val(-1);

  CLI::App* distance_cmd = sft->add_subcommand("distance", "metric D on S(Z)");
  distance_cmd->add_option("left", opts.input)->required();
  distance_cmd->add_option("right", opts.other)->required();
  distance_cmd->add_option("--cap", opts.cap, "radius cap");

  CLI::App* reduce_cmd = sft->add_subcommand("reduce", "Berger-property reduction");
  reduce_cmd->add_option("--plus", opts.plus)->required();
  reduce_cmd->add_option("--minus", opts.minus)->required();
  reduce_cmd->add_option("--input", opts.input)->required();
  reduce_cmd->add_option("-o,--output", opts.output)->required();

  CLI::App* sofic_cmd = sft->add_subcommand("sofic-reduce", "sofic Rice reduction");
  sofic_cmd->add_option("--plus", opts.plus)->required();
  sofic_cmd->add_option("--input", opts.input)->required();
  sofic_cmd->add_option("-o,--output", opts.output)->required();

  CLI::App* greedy_cmd = sft->add_subcommand("greedy-free", "greedy free-group configuration");
  greedy_cmd->add_option("file", opts.input)->required();
  greedy_cmd->add_option("-n", opts.n, "ball radius");

  // ---- graph ----
  CLI::App* graph_cmd = app.add_subcommand("graph", "graphs, 3-paths, actions");
  graph_cmd->require_subcommand(1);
  struct {
    std::string graph, output;
    int r = 2, probe = 6;
    std::int64_t u = 0, v = 1, steps = 10;
    BudgetFlags budget;
  } gopts;

  CLI::App* ball_cmd = graph_cmd->add_subcommand("ball", "ball subgraph");
  ball_cmd->add_option("--graph", gopts.graph)->required();
  ball_cmd->add_option("-r", gopts.r, "radius");
  ball_cmd->add_option("-o,--output", gopts.output);

  CLI::App* ends_cmd = graph_cmd->add_subcommand("ends", "finite-scale end estimate");
  ends_cmd->add_option("--graph", gopts.graph)->required();
  ends_cmd->add_option("-r", gopts.r, "inner radius");
  ends_cmd->add_option("--probe", gopts.probe, "outer radius");

  CLI::App* tp_cmd = graph_cmd->add_subcommand("threepath-finite", "Hamiltonian 3-path");
  tp_cmd->add_option("--graph", gopts.graph)->required();
  tp_cmd->add_option("-u", gopts.u, "initial vertex");
  tp_cmd->add_option("-v", gopts.v, "final vertex");

  CLI::App* stream_cmd = graph_cmd->add_subcommand("threepath-stream",
                                                   "streaming bi-infinite Hamiltonian 3-path");
  stream_cmd->add_option("--graph", gopts.graph)->required();
  stream_cmd->add_option("--steps", gopts.steps, "targets to process");
  add_budget_flags(stream_cmd, gopts.budget);

  CLI::App* tla_cmd = graph_cmd->add_subcommand("tla", "transitive translation-like action");
  tla_cmd->add_option("--graph", gopts.graph)->required();
  tla_cmd->add_option("--steps", gopts.steps, "action table rows");
  add_budget_flags(tla_cmd, gopts.budget);

  CLI::App* orbits_cmd = graph_cmd->add_subcommand("orbits", "orbit partition fragments");
  orbits_cmd->add_option("--graph", gopts.graph)->required();
  orbits_cmd->add_option("-r", gopts.r, "coverage radius");
  add_budget_flags(orbits_cmd, gopts.budget);

  // ---- tx ----
  CLI::App* tx_cmd = app.add_subcommand("tx", "subshift of bounded actions");
  tx_cmd->require_subcommand(1);
  struct {
    std::string spec, x, pres, window, output;
    int radius_cap = 3;
  } topts;

  CLI::App* buildt_cmd = tx_cmd->add_subcommand("build-t", "build T");
  buildt_cmd->add_option("--spec", topts.spec)->required();
  buildt_cmd->add_option("-o,--output", topts.output)->required();

  CLI::App* buildtx_cmd = tx_cmd->add_subcommand("build-tx", "build T[X]");
  buildtx_cmd->add_option("--spec", topts.spec)->required();
  buildtx_cmd->add_option("--x", topts.x, "overlay SFT over H")->required();
  buildtx_cmd->add_option("--radius-cap", topts.radius_cap);
  buildtx_cmd->add_option("-o,--output", topts.output)->required();

  CLI::App* validate_cmd = tx_cmd->add_subcommand("validate", "validate a window");
  validate_cmd->add_option("--pres", topts.pres)->required();
  validate_cmd->add_option("--window", topts.window, "pattern coding file")->required();

  // Let the global --format flag appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands(nullptr)) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  auto load_sft = [](const std::string& path) { return io::sft_from_json(io::load_json_file(path)); };
  auto load_cayley = [](const std::string& path) {
    io::GraphFile gf = io::graph_from_json(io::load_json_file(path));
    if (gf.kind != io::GraphFile::Kind::Cayley)
      throw Error("this subcommand requires a Cayley graph file");
    return CayleyGraph(gf.group);
  };

  if (check_empty_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    EmptinessBudget budget{opts.budget.max_radius, opts.budget.max_lookahead,
                           opts.budget.max_patterns};
    Certificate cert = check_empty(x, budget);
    json j;
    switch (cert.verdict) {
      case Certificate::Verdict::Empty: {
        j["verdict"] = "empty";
        j["radius"] = cert.radius;
        j["detail"] = cert.detail;
        std::string text = cert.radius >= 0
                               ? "EMPTY at radius <= " + std::to_string(cert.radius)
                               : "EMPTY (" + cert.detail + ")";
        emit(format, j, text);
        return 0;
      }
      case Certificate::Verdict::Nonempty: {
        j["verdict"] = "nonempty";
        std::string text = "NONEMPTY";
        if (cert.witness_symbol) {
          j["witness_symbol"] = *cert.witness_symbol;
          text += ": fixed point of symbol " + std::to_string(*cert.witness_symbol);
        } else if (cert.witness_pattern) {
          j["witness_pattern"] = pattern_to_json(*cert.witness_pattern, x.group);
          text += ": witness window (" + cert.detail + ")";
        }
        emit(format, j, text);
        return 0;
      }
      case Certificate::Verdict::Unknown:
        j["verdict"] = "unknown";
        j["detail"] = cert.detail;
        emit(format, j, "UNKNOWN (" + cert.detail + ")");
        return 2;
    }
  }

  if (fixed_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    auto syms = fixed_point_symbols(x);
    json j;
    j["has_fixed_point"] = !syms.empty();
    j["symbols"] = syms;
    if (syms.empty()) {
      emit(format, j, "no");
    } else {
      emit(format, j, "yes: symbol " + std::to_string(syms.front()));
    }
    return 0;
  }

  if (product_cmd->parsed() || union_cmd->parsed()) {
    SftPresentation a = load_sft(opts.input);
    SftPresentation b = load_sft(opts.other);
    SftPresentation out = product_cmd->parsed() ? product(a, b) : disjoint_union(a, b);
    io::save_json_file(opts.output, io::sft_to_json(out));
    emit(format, json{{"alphabet_size", out.alphabet.size()},
                      {"forbidden_count", out.forbidden.size()}},
         "wrote " + opts.output);
    return 0;
  }

  if (pullback_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    PullbackFamily fam = pullback_to_free(x);
    SftPresentation out = fam.presentation(opts.relator_budget);
    io::save_json_file(opts.output, io::sft_to_json(out));
    emit(format, json{{"relator_codings", out.forbidden.size() - fam.base.forbidden.size()}},
         "wrote " + opts.output);
    return 0;
  }

  if (extfree_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    GroupSpec target = io::group_from_json(io::load_json_file(opts.other));
    SftPresentation out = free_extension(x, target);
    io::save_json_file(opts.output, io::sft_to_json(out));
    emit(format, json{{"ok", true}}, "wrote " + opts.output);
    return 0;
  }

  if (entropy_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    double bound = entropy_upper_bound(x, opts.n, opts.m, opts.budget.max_patterns);
    json j;
    j["entropy_upper_bound"] = bound;
    j["n"] = opts.n;
    j["m"] = opts.m;
    char text[128];
    std::snprintf(text, sizeof text, "entropy upper bound (n=%d, m=%d): %.10f", opts.n, opts.m,
                  bound);
    emit(format, j, text);
    return 0;
  }

  if (zdecide_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    ZDecision zd = z_decide(x);
    json j;
    j["empty"] = zd.empty();
    j["window"] = zd.window();
    std::string text;
    if (zd.empty()) {
      text = "EMPTY";
    } else {
      j["entropy"] = zd.entropy();
      char buf[96];
      std::snprintf(buf, sizeof buf, "NONEMPTY, entropy %.10f", zd.entropy());
      text = buf;
    }
    if (opts.n >= 0 && !zd.empty()) {
      json lang = json::array();
      for (const auto& row : zd.language(opts.n)) lang.push_back(row);
      j["language"] = lang;
      text += ", |L_" + std::to_string(opts.n) +
              "| = " + std::to_string(zd.language(opts.n).size());
    }
    emit(format, j, text);
    return 0;
  }

  if (distance_cmd->parsed()) {
    SftPresentation a = load_sft(opts.input);
    SftPresentation b = load_sft(opts.other);
    DistanceResult d = subshift_distance(a, b, opts.cap);
    json j;
    j["distance"] = d.value;
    j["exact_zero"] = d.exact_zero;
    j["agree_radius"] = d.agree_radius;
    char text[160];
    if (d.exact_zero)
      std::snprintf(text, sizeof text, "D = 0 (pruned edge shifts coincide)");
    else if (d.agree_radius < 0)
      std::snprintf(text, sizeof text,
                    "D = 2 (even L_0 differs; inf over the empty set, clamped)");
    else
      std::snprintf(text, sizeof text, "D = %.10g (languages agree up to radius %d)", d.value,
                    d.agree_radius);
    emit(format, j, text);
    return 0;
  }

  if (reduce_cmd->parsed()) {
    SftPresentation plus = load_sft(opts.plus);
    SftPresentation minus = load_sft(opts.minus);
    SftPresentation input = load_sft(opts.input);
    SftPresentation out = rice_reduction(plus, minus, input);
    io::save_json_file(opts.output, io::sft_to_json(out));
    emit(format, json{{"alphabet_size", out.alphabet.size()}}, "wrote " + opts.output);
    return 0;
  }

  if (sofic_cmd->parsed()) {
    SoficPresentation plus = io::sofic_from_json(io::load_json_file(opts.plus));
    SftPresentation input = load_sft(opts.input);
    SoficPresentation out = sofic_reduction(plus, input);
    io::save_json_file(opts.output, io::sofic_to_json(out));
    emit(format, json{{"alphabet_size", out.base.alphabet.size()}}, "wrote " + opts.output);
    return 0;
  }

  if (greedy_cmd->parsed()) {
    SftPresentation x = load_sft(opts.input);
    auto p = greedy_free_configuration(x, opts.n);
    if (!p) {
      emit(format, json{{"empty", true}}, "EMPTY: no symbol survives arc consistency");
      return 0;
    }
    json j;
    j["empty"] = false;
    j["pattern"] = pattern_to_json(*p, x.group);
    std::string text;
    for (const auto& [g, v] : p->cells()) {
      std::string w = x.group.word_for(g);
      text += (w.empty() ? "e" : w) + "\t" + std::to_string(v) + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit(format, j, text);
    return 0;
  }

  if (ball_cmd->parsed()) {
    io::GraphFile gf = io::graph_from_json(io::load_json_file(gopts.graph));
    const Graph* g = nullptr;
    std::optional<CayleyGraph> cay;
    if (gf.kind == io::GraphFile::Kind::Cayley) {
      cay.emplace(gf.group);
      g = &*cay;
    } else {
      g = &gf.finite;
    }
    FiniteGraph ball = ball_subgraph(*g, 0, gopts.r);
    json j;
    j["vertices"] = ball.vertices().size();
    json edges = json::array();
    for (const auto& [u, v] : ball.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    if (!gopts.output.empty()) {
      json out;
      out["kind"] = "finite";
      out["vertices"] = ball.vertices().size();
      // Re-index vertices densely for the finite graph file.
      std::map<Vertex, std::int64_t> index;
      for (std::size_t i = 0; i < ball.vertices().size(); ++i)
        index[ball.vertices()[i]] = static_cast<std::int64_t>(i);
      json fedges = json::array();
      for (const auto& [u, v] : ball.edges())
        fedges.push_back(json::array({index.at(u), index.at(v)}));
      out["edges"] = fedges;
      io::save_json_file(gopts.output, out);
    }
    emit(format, j,
         "ball r=" + std::to_string(gopts.r) + ": " + std::to_string(ball.vertices().size()) +
             " vertices, " + std::to_string(ball.edges().size()) + " edges");
    return 0;
  }

  if (ends_cmd->parsed()) {
    CayleyGraph g = load_cayley(gopts.graph);
    int count = end_count_estimate(g, 0, gopts.r, gopts.probe);
    emit(format, json{{"end_estimate", count}, {"r", gopts.r}, {"probe", gopts.probe}},
         "end estimate (r=" + std::to_string(gopts.r) + ", R=" + std::to_string(gopts.probe) +
             "): " + std::to_string(count));
    return 0;
  }

  if (tp_cmd->parsed()) {
    io::GraphFile gf = io::graph_from_json(io::load_json_file(gopts.graph));
    if (gf.kind != io::GraphFile::Kind::Finite)
      throw Error("threepath-finite requires a finite graph file");
    ThreePath f = finite_hamiltonian(gf.finite, gopts.u, gopts.v);
    PathReport rep = validate_hamiltonian_three_path(gf.finite, f);
    json j;
    json order = json::array();
    for (Vertex v : f.verts) order.push_back(v);
    j["order"] = order;
    j["valid"] = rep.ok();
    std::string text;
    for (std::size_t i = 0; i < f.verts.size(); ++i)
      text += std::to_string(static_cast<std::int64_t>(i)) + "\t" +
              std::to_string(f.verts[i]) + "\n";
    text += rep.ok() ? "valid: yes" : "valid: NO";
    emit(format, j, text);
    return rep.ok() ? 0 : 1;
  }

  if (stream_cmd->parsed() || tla_cmd->parsed()) {
    CayleyGraph g = load_cayley(gopts.graph);
    SearchBudget budget = to_search_budget(gopts.budget);
    auto [seed, promise] = make_seed(g, budget);
    if (stream_cmd->parsed()) {
      ThreePath f = hamiltonian_stream(g, seed, promise, gopts.steps, budget);
      json j = validation_report(g, f);
      j["path"] = path_to_json(g, f);
      if (format == "json") {
        emit(format, j, "");
      } else {
        print_path_table(g, f);
        std::printf("targets processed: %" PRId64 "\n", gopts.steps);
      }
      return 0;
    }
    TranslationAction act(g, seed, promise, budget);
    json rows = json::array();
    std::string text;
    for (std::int64_t i = 0; i < gopts.steps; ++i) {
      Vertex v = i;
      Vertex moved = act.apply(v, 1);
      json row;
      row["vertex"] = v;
      row["word"] = g.spec().word_for(g.element(v));
      row["next"] = moved;
      row["next_word"] = g.spec().word_for(g.element(moved));
      rows.push_back(row);
      auto w0 = g.spec().word_for(g.element(v));
      auto w1 = g.spec().word_for(g.element(moved));
      text += std::to_string(v) + "\t" + (w0.empty() ? "e" : w0) + "\t-> " +
              std::to_string(moved) + "\t" + (w1.empty() ? "e" : w1) + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit(format, json{{"action", rows}}, text);
    return 0;
  }

  if (orbits_cmd->parsed()) {
    CayleyGraph g = load_cayley(gopts.graph);
    SearchBudget budget = to_search_budget(gopts.budget);
    auto fragments = orbit_partition(g, g, gopts.r, budget);
    json j = json::array();
    std::string text;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      json frag;
      frag["fragment"] = i;
      frag["path"] = path_to_json(g, fragments[i]);
      j.push_back(frag);
      text += "fragment " + std::to_string(i) + ":";
      for (Vertex v : fragments[i].verts) text += " " + std::to_string(v);
      text += "\n";
    }
    text += "fragments: " + std::to_string(fragments.size());
    emit(format, json{{"fragments", j}}, text);
    return 0;
  }

  if (buildt_cmd->parsed() || buildtx_cmd->parsed()) {
    io::TxSpec spec = io::tx_from_json(io::load_json_file(topts.spec));
    ArrowAlphabet arrows(spec.h, spec.displacements);
    SftPresentation T = build_T(spec.group, arrows);
    if (buildt_cmd->parsed()) {
      io::save_json_file(topts.output, io::sft_to_json(T));
      emit(format, json{{"alphabet_size", T.alphabet.size()},
                        {"forbidden_count", T.forbidden.size()}},
           "wrote " + topts.output);
      return 0;
    }
    SftPresentation x = load_sft(topts.x);
    SftPresentation TX = build_TX(T, spec.group, arrows, x, topts.radius_cap);
    io::save_json_file(topts.output, io::sft_to_json(TX));
    emit(format, json{{"alphabet_size", TX.alphabet.size()},
                      {"forbidden_count", TX.forbidden.size()}},
         "wrote " + topts.output);
    return 0;
  }

  if (validate_cmd->parsed()) {
    SftPresentation pres = load_sft(topts.pres);
    PatternCoding window = io::coding_from_json(io::load_json_file(topts.window));
    Pattern w = realize(window, pres.group);
    bool ok = validate_window(pres, w);
    emit(format, json{{"valid", ok}}, ok ? "valid: yes" : "valid: no");
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const BudgetExceededError& e) {
    std::fprintf(stderr, "undecided: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
