#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kdiv/divider.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/evenhole.hpp"
#include "kdiv/formats.hpp"
#include "kdiv/oracles.hpp"
#include "kdiv/ramsey.hpp"
#include "kdiv/simplicial.hpp"

namespace kdiv::cli {
namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string input;
  std::string g6;
  std::string format = "g6";
  std::size_t k = 2;
  std::optional<std::size_t> cap_n;
  std::uint64_t seed = 1;
  std::uint64_t budget = 2'000'000;
  bool json = false;
  std::string out;
  bool require_ehf = false;
  bool quiet = false;
  std::size_t t = 4;
  double c = 1.0;
  std::size_t t_max = 100;
  std::size_t n = 17;
  std::size_t alpha = 3;
};

// A handler failed in a way that maps to a specific exit code.
struct Failure {
  int code;
  std::string message;
  json detail = json::object();
};

struct Outcome {
  json report;
  int code = exit_ok;
};

json to_json(const VertexSet& s) { return s.to_vector(); }

json cover_json(const std::vector<VertexSet>& cover) {
  json parts = json::array();
  for (const auto& p : cover) parts.push_back(to_json(p));
  return parts;
}

std::size_t cap_or(const Config& cfg, std::size_t fallback) { return cfg.cap_n.value_or(fallback); }

[[noreturn]] void unverified(const std::string& what) {
  throw Failure{exit_internal, "refusing to emit an unverified certificate: " + what};
}

std::optional<json> even_hole_guard(const Config& cfg, const Graph& g) {
  if (!cfg.require_ehf) return std::nullopt;
  const auto hole = shortest_even_hole(g, cap_or(cfg, default_even_hole_cap));
  if (!hole) return std::nullopt;
  json r;
  r["graph6"] = encode_graph6(g);
  r["even_hole_free"] = false;
  r["even_hole"] = hole->cycle;
  return r;
}

EliminationOrder require_order(const Graph& g, std::size_t k) {
  auto result = elimination_order(g, k);
  if (!result) {
    throw OrderNotFound("no " + std::to_string(k) + "-simplicial elimination order", result.residual,
                        encode_graph6(induced_subgraph(g, result.residual).graph));
  }
  return std::move(*result.order);
}

void note_k1(const Config& cfg, json& r, std::ostream& err) {
  if (cfg.k != 1) return;
  r["note"] = "k = 1 is an extension beyond the stated range k >= 2";
  if (!cfg.quiet) err << "note: k = 1 is an extension beyond the stated range k >= 2\n";
}

Outcome cmd_info(const Config& cfg, const Graph& g, std::ostream&) {
  json r;
  r["graph6"] = encode_graph6(g);
  r["n"] = g.order();
  r["m"] = g.edge_count();
  r["omega"] = max_clique(g).size;
  r["alpha"] = max_independent_set(g).size;
  const std::size_t chi_cap = cap_or(cfg, OracleCaps{}.chromatic);
  r["chi"] = g.order() <= chi_cap ? json(chromatic_number(g, chi_cap).chi) : json(nullptr);
  const auto perfect = is_perfect(g, cap_or(cfg, OracleCaps{}.perfect));
  r["perfect"] = perfect.perfect;
  if (perfect.witness) r[perfect.antihole ? "odd_antihole" : "odd_hole"] = perfect.witness->cycle;
  const auto hole = shortest_even_hole(g, cap_or(cfg, default_even_hole_cap));
  r["even_hole_free"] = !hole;
  if (hole) {
    if (!is_hole(g, hole->cycle)) unverified("even hole witness");
    r["even_hole"] = hole->cycle;
  }
  return {r, cfg.require_ehf && hole ? exit_negative : exit_ok};
}

Outcome cmd_divide(const Config& cfg, const Graph& g, std::ostream& err) {
  if (auto guard = even_hole_guard(cfg, g)) return {*guard, exit_negative};
  const auto order = require_order(g, cfg.k);
  const auto outcome = divide(g, cfg.k, order, {.check_trace = true});
  if (const auto check = verify_division(g, outcome.division); !check) unverified(check.diagnostic);
  json r;
  r["graph6"] = encode_graph6(g);
  const json certificate = division_certificate(g, outcome);
  for (const auto& [key, value] : certificate.items()) r[key] = value;
  r["verified"] = true;
  note_k1(cfg, r, err);
  return {r, exit_ok};
}

Outcome cmd_color(const Config& cfg, const Graph& g, std::ostream& err) {
  if (auto guard = even_hole_guard(cfg, g)) return {*guard, exit_negative};
  const auto coloring = color_by_division(g, cfg.k);
  if (!is_proper_coloring(g, coloring.colors)) unverified("colouring is not proper");
  const bool pass = coloring.colors_used <= coloring.bound;
  json r;
  r["graph6"] = encode_graph6(g);
  r["n"] = g.order();
  r["k"] = cfg.k;
  r["omega"] = coloring.omega;
  r["colors_used"] = coloring.colors_used;
  r["bound"] = coloring.bound;
  r["pass"] = pass;
  r["colors"] = coloring.colors;
  note_k1(cfg, r, err);
  return {r, pass ? exit_ok : exit_internal};
}

Outcome cmd_evenhole(const Config& cfg, const Graph& g, std::ostream&) {
  const auto hole = shortest_even_hole(g, cap_or(cfg, default_even_hole_cap));
  if (hole && !is_hole(g, hole->cycle)) unverified("even hole witness");
  json r;
  r["graph6"] = encode_graph6(g);
  r["even_hole_free"] = !hole;
  r["even_hole"] = hole ? json(hole->cycle) : json(nullptr);
  return {r, cfg.require_ehf && hole ? exit_negative : exit_ok};
}

Outcome cmd_simplicial(const Config& cfg, const Graph& g, std::ostream& err) {
  json r;
  r["graph6"] = encode_graph6(g);
  r["k"] = cfg.k;
  const auto result = elimination_order(g, cfg.k);
  r["found"] = result.order.has_value();
  if (!result) {
    r["residual"] = to_json(result.residual);
    r["residual_graph6"] = encode_graph6(induced_subgraph(g, result.residual).graph);
    return {r, exit_negative};
  }
  if (!is_valid_elimination_order(g, *result.order)) unverified("elimination order");
  json steps = json::array();
  for (const auto& step : result.order->steps) {
    json s;
    s["v"] = step.vertex;
    s["cover"] = cover_json(step.cover);
    steps.push_back(s);
  }
  r["order"] = steps;
  note_k1(cfg, r, err);
  return {r, exit_ok};
}

Outcome cmd_perfectdiv(const Config& cfg, const Graph& g, std::ostream&) {
  const auto result = is_perfectly_divisible(g, cap_or(cfg, OracleCaps{}.perfectly_divisible));
  json r;
  r["graph6"] = encode_graph6(g);
  r["divisible"] = result.divisible;
  if (result.divisible && result.a) {
    const VertexSet& a = *result.a;
    const VertexSet& b = *result.b;
    const bool ok = (a | b) == g.vertices() && !a.intersects(b) &&
                    is_perfect(induced_subgraph(g, a).graph).perfect &&
                    clique_number(g, b) < max_clique(g).size;
    if (!ok) unverified("perfect division witness");
    r["A"] = to_json(a);
    r["B"] = to_json(b);
  }
  if (result.failing) {
    r["failing"] = to_json(*result.failing);
    r["failing_graph6"] = encode_graph6(induced_subgraph(g, *result.failing).graph);
  }
  return {r, result.divisible ? exit_ok : exit_negative};
}

Outcome cmd_kdiv(const Config& cfg, const Graph& g, std::ostream&) {
  const auto result = is_k_divisible(g, cfg.k, cap_or(cfg, OracleCaps{}.k_divisible));
  json r;
  r["graph6"] = encode_graph6(g);
  r["k"] = cfg.k;
  r["divisible"] = result.divisible;
  if (result.divisible) {
    const std::size_t omega = max_clique(g).size;
    if (result.partition.size() != g.order()) unverified("partition size");
    for (std::size_t label = 0; label < cfg.k; ++label) {
      VertexSet part(g.order());
      for (Vertex v = 0; v < g.order(); ++v)
        if (result.partition[v] == label) part.insert(v);
      if (clique_number(g, part) >= omega) unverified("part " + std::to_string(label) + " holds a maximum clique");
    }
    r["partition"] = result.partition;
  }
  if (result.failing) {
    r["failing"] = to_json(*result.failing);
    r["failing_graph6"] = encode_graph6(induced_subgraph(g, *result.failing).graph);
  }
  return {r, result.divisible ? exit_ok : exit_negative};
}

Outcome cmd_ramsey_verify(const Config& cfg, const Graph& g, std::ostream&) {
  return {kdiv::to_json(verify_counterexample(g, cfg.t, cap_or(cfg, default_ramsey_cap))), exit_ok};
}

Outcome cmd_ramsey_search(const Config& cfg) {
  const auto result = search_k4_free(cfg.n, cfg.alpha, cfg.budget, cfg.seed);
  if (count_violations(result.graph, cfg.alpha) != result.violations) unverified("violation count");
  json r;
  r["n"] = cfg.n;
  r["alpha_target"] = cfg.alpha;
  r["seed"] = cfg.seed;
  r["budget"] = cfg.budget;
  r["steps"] = result.steps;
  r["violations"] = result.violations;
  r["graph6"] = encode_graph6(result.graph);
  r["report"] = kdiv::to_json(result.report);
  return {r, result.violations == 0 ? exit_ok : exit_negative};
}

Outcome cmd_tscan(const Config& cfg) {
  json r;
  r["c"] = cfg.c;
  r["log"] = "natural";
  r["note"] = "depends on the unpublished constant c";
  json rows = json::array();
  json first = nullptr;
  for (const auto& row : required_t_scan(cfg.c, cfg.t_max)) {
    rows.push_back({{"t", row.t}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"satisfied", row.satisfied}});
    if (row.satisfied && first.is_null()) first = row.t;
  }
  r["first_satisfied"] = first;
  r["rows"] = rows;
  return {r, exit_ok};
}

void render_text(const json& r, std::ostream& out) {
  for (const auto& [key, value] : r.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>() << '\n';
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << '\n';
      for (const auto& row : value) out << "  " << row.dump() << '\n';
    } else {
      out << value.dump() << '\n';
    }
  }
}

std::vector<Graph> load_graphs(const Config& cfg) {
  const bool has_path = !cfg.input.empty();
  const bool has_inline = !cfg.g6.empty();
  if (has_path == has_inline) throw std::invalid_argument("give exactly one input: a path (or -) or --g6");
  const Format format = parse_format_name(cfg.format);
  if (has_inline) {
    if (format != Format::graph6) throw std::invalid_argument("--g6 takes graph6 only");
    return {parse_graph6(cfg.g6)};
  }
  if (cfg.input == "-") return read_graphs(std::cin, format);
  std::ifstream file(cfg.input);
  if (!file) throw std::invalid_argument("cannot open " + cfg.input);
  auto graphs = read_graphs(file, format);
  if (graphs.empty()) throw std::invalid_argument(cfg.input + ": no graphs");
  return graphs;
}

// Runs f, turning every exception into an exit code and a JSON error line.
Outcome guarded(const std::function<Outcome()>& f, const std::string& graph6, std::ostream& err) {
  auto fail = [&](int code, const std::string& message, json extra = json::object()) {
    err << "error: " << message << '\n';
    json r;
    if (!graph6.empty()) r["graph6"] = graph6;
    r["error"] = message;
    for (auto& [key, value] : extra.items()) r[key] = value;
    return Outcome{r, code};
  };
  try {
    return f();
  } catch (const Failure& e) {
    return fail(e.code, e.message, e.detail);
  } catch (const OrderNotFound& e) {
    err << "stuck residual: " << e.residual_graph6() << '\n';
    return fail(exit_negative, e.what(),
                {{"residual", to_json(e.residual())}, {"residual_graph6", e.residual_graph6()}});
  } catch (const TheoremViolation& e) {
    return fail(exit_internal, e.what(), {{"trace_length", e.trace().size()}});
  } catch (const CapExceeded& e) {
    return fail(exit_cap, e.what());
  } catch (const ParseError& e) {
    return fail(exit_input, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(exit_input, e.what());
  } catch (const std::exception& e) {
    return fail(exit_internal, e.what());
  }
}

std::optional<std::size_t> parse_cap(const char* text) {
  if (text == nullptr) return std::nullopt;
  const std::string s(text);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value == 0)
    throw std::invalid_argument("KDIV_CAP_N must be a positive integer, got '" + s + "'");
  return value;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Divisibility of graphs via k-simplicial elimination orders"};
  app.require_subcommand(1);

  std::size_t cap_flag = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "One JSON object per line on stdout");
    sub->add_option("--out", cfg.out, "Write the JSON report(s) here");
    sub->add_option("--cap-n", cap_flag, "Vertex cap for the exact oracles (overrides KDIV_CAP_N)");
    sub->add_flag("-q,--quiet", cfg.quiet, "No notes on stderr");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Input file, or - for stdin");
    sub->add_option("--g6", cfg.g6, "Inline graph6 string");
    sub->add_option("--format", cfg.format, "g6 | dimacs | edges")->capture_default_str();
    add_common(sub);
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "Number of cliques per neighbourhood")->capture_default_str(); };

  using GraphCommand = Outcome (*)(const Config&, const Graph&, std::ostream&);
  std::vector<std::pair<CLI::App*, GraphCommand>> graph_commands;
  auto graph_command = [&](const char* name, const char* help, GraphCommand f) {
    auto* sub = app.add_subcommand(name, help);
    add_input(sub);
    graph_commands.emplace_back(sub, f);
    return sub;
  };

  auto* info = graph_command("info", "n, m, clique/independence/chromatic numbers, perfection, even holes", cmd_info);
  info->add_flag("--require-ehf", cfg.require_ehf, "Exit 1 when an even hole exists");
  auto* divide_cmd = graph_command("divide", "Write a verified (k+1)-division certificate", cmd_divide);
  add_k(divide_cmd);
  divide_cmd->add_flag("--require-ehf", cfg.require_ehf, "Exit 1 when an even hole exists");
  auto* color = graph_command("color", "Colour by recursive division and check the (k+1)^(omega-1) bound", cmd_color);
  add_k(color);
  color->add_flag("--require-ehf", cfg.require_ehf, "Exit 1 when an even hole exists");
  auto* evenhole = graph_command("evenhole", "Shortest even hole, if any", cmd_evenhole);
  evenhole->add_flag("--require-ehf", cfg.require_ehf, "Exit 1 when an even hole exists");
  add_k(graph_command("simplicial", "k-simplicial elimination order or the stuck residual", cmd_simplicial));
  graph_command("perfectdiv", "Exact perfect-divisibility check", cmd_perfectdiv);
  add_k(graph_command("kdiv", "Exact k-divisibility check", cmd_kdiv));
  auto* verify = graph_command("ramsey-verify", "Evaluate H against the complement argument", cmd_ramsey_verify);
  verify->add_option("--t", cfg.t, "Target parameter t")->capture_default_str();

  auto* search = app.add_subcommand("ramsey-search", "Local search for a K4-free graph with small independence number");
  search->add_option("--n", cfg.n, "Vertex count")->capture_default_str();
  search->add_option("--alpha", cfg.alpha, "Independence number target")->capture_default_str();
  search->add_option("--budget", cfg.budget, "Total flip proposals")->capture_default_str();
  search->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  add_common(search);

  auto* tscan = app.add_subcommand("tscan", "Tabulate c*t^3/ln^4(t) - 1 against 3(t-1)^2");
  tscan->add_option("--c", cfg.c, "Constant c")->capture_default_str();
  tscan->add_option("--t-max", cfg.t_max, "Largest t")->capture_default_str();
  add_common(tscan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    cfg.cap_n = parse_cap(std::getenv("KDIV_CAP_N"));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--cap-n") == 0) continue;
    if (cap_flag == 0) {
      err << "error: --cap-n must be positive\n";
      return exit_input;
    }
    cfg.cap_n = cap_flag;
  }
  if (cfg.k == 0) {
    err << "error: --k must be at least 1\n";
    return exit_input;
  }

  std::vector<Outcome> outcomes;
  if (search->parsed()) {
    outcomes.push_back(guarded([&] { return cmd_ramsey_search(cfg); }, "", err));
  } else if (tscan->parsed()) {
    outcomes.push_back(guarded([&] { return cmd_tscan(cfg); }, "", err));
  } else {
    GraphCommand command = nullptr;
    for (auto [sub, f] : graph_commands)
      if (sub->parsed()) command = f;
    std::vector<Graph> graphs;
    const Outcome loaded = guarded(
        [&] {
          graphs = load_graphs(cfg);
          return Outcome{};
        },
        "", err);
    if (loaded.code != exit_ok) return loaded.code;
    for (const Graph& g : graphs)
      outcomes.push_back(guarded([&] { return command(cfg, g, err); }, encode_graph6(g), err));
  }

  int code = exit_ok;
  for (const auto& o : outcomes) code = std::max(code, o.code);

  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return exit_input;
    }
    for (const auto& o : outcomes) file << o.report.dump() << '\n';
  }
  const bool as_json = cfg.json || outcomes.size() > 1;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (as_json) {
      out << outcomes[i].report.dump() << '\n';
    } else {
      if (i > 0) out << '\n';
      render_text(outcomes[i].report, out);
    }
  }
  return code;
}

}  // namespace kdiv::cli
