// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [output-dir]
//
// Each criterion also writes a certificate file under output-dir/run1; the
// determinism criterion repeats the whole run into output-dir/run2 and
// compares the files byte for byte.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "brute_force.hpp"
#include "kdiv/divider.hpp"
#include "kdiv/evenhole.hpp"
#include "kdiv/formats.hpp"
#include "kdiv/generators.hpp"
#include "kdiv/oracles.hpp"
#include "kdiv/ramsey.hpp"
#include "kdiv/simplicial.hpp"

namespace fs = std::filesystem;
using namespace kdiv;
using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t corpus_seed = 20240801;
constexpr std::size_t random_target = 2000;
constexpr std::uint64_t search_budget = 4'000'000;
constexpr std::uint64_t search_seed = 1;

// FNV-1a, enough to fingerprint certificate streams.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= '\n';
    hash_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    std::ostringstream s;
    s << std::hex << hash_;
    return s.str();
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

struct Check {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

// Connected even-hole-free graphs: every labelled graph for n <= 7, then
// random draws of varied density until `random_target` pass for n = 8, 9.
void for_each_corpus_graph(const std::function<void(const Graph&, bool exhaustive)>& visit) {
  for (std::size_t n = 4; n <= 7; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = gen::from_code(n, code);
      if (is_connected(g) && is_even_hole_free(g)) visit(g, true);
    }
  }
  std::mt19937_64 rng(corpus_seed);
  for (std::size_t n = 8; n <= 9; ++n) {
    std::size_t kept = 0;
    while (kept < random_target) {
      const double p = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
      const Graph g = gen::random(n, p, rng);
      if (!is_connected(g) || !is_even_hole_free(g)) continue;
      ++kept;
      visit(g, false);
    }
  }
}

struct CorpusVerdicts {
  Check divide;
  Check color;
};

CorpusVerdicts run_corpus(const fs::path& dir) {
  CorpusVerdicts v;
  std::vector<std::size_t> count(10, 0);
  std::vector<Digest> division_digest(10);
  std::vector<Digest> color_digest(10);
  std::size_t violations = 0;
  std::size_t chi_checked = 0;

  for_each_corpus_graph([&](const Graph& g, bool) {
    const std::size_t n = g.order();
    ++count[n];
    const std::string g6 = encode_graph6(g);

    const auto order = elimination_order(g, 2);
    if (!order) {
      v.divide.fail(g6 + ": no 2-simplicial elimination order");
      return;
    }
    try {
      const auto outcome = divide(g, 2, *order.order, {.check_trace = true});
      if (const auto check = verify_division(g, outcome.division); !check) {
        v.divide.fail(g6 + ": " + check.diagnostic);
      }
      division_digest[n].add(division_certificate(g, outcome).dump());
    } catch (const TheoremViolation& e) {
      ++violations;
      v.divide.fail(g6 + ": " + e.what());
    }

    try {
      const auto c = color_by_division(g, 2);
      if (!is_proper_coloring(g, c.colors)) v.color.fail(g6 + ": improper colouring");
      if (c.colors_used > division_color_bound(2, c.omega))
        v.color.fail(g6 + ": " + std::to_string(c.colors_used) + " colours > 3^(omega-1)");
      if (n <= 8) {
        ++chi_checked;
        const std::size_t chi = chromatic_number(g).chi;
        if (c.colors_used < chi) v.color.fail(g6 + ": fewer colours than chi");
      }
      json line = {{"graph6", g6}, {"colors_used", c.colors_used}, {"colors", c.colors}};
      color_digest[n].add(line.dump());
    } catch (const std::exception& e) {
      v.color.fail(g6 + ": " + e.what());
    }
  });

  std::ofstream divide_file(dir / "criterion1_divisions.jsonl", std::ios::binary);
  std::ofstream color_file(dir / "criterion2_colorings.jsonl", std::ios::binary);
  std::ostringstream sizes;
  std::size_t total = 0;
  for (std::size_t n = 4; n <= 9; ++n) {
    divide_file << json{{"n", n}, {"graphs", count[n]}, {"digest", division_digest[n].hex()}}.dump() << '\n';
    color_file << json{{"n", n}, {"graphs", count[n]}, {"digest", color_digest[n].hex()}}.dump() << '\n';
    sizes << (n > 4 ? ", " : "") << "n=" << n << ": " << count[n];
    total += count[n];
  }
  v.divide.detail = std::to_string(total) + " connected even-hole-free graphs (" + sizes.str() + "), " +
                    std::to_string(violations) + " theorem violations";
  v.color.detail = std::to_string(total) + " colourings, " + std::to_string(chi_checked) + " compared with exact chi";
  return v;
}

Check criterion3(const fs::path& dir) {
  Check v;
  std::ofstream file(dir / "criterion3_perfect.jsonl", std::ios::binary);
  Digest digest;
  std::size_t checked = 0;
  auto check = [&](const Graph& g) {
    const bool fast = is_perfect(g).perfect;
    const bool slow = brute::is_perfect_by_definition(g);
    if (fast != slow) v.fail(encode_graph6(g) + ": oracle says " + (fast ? "perfect" : "imperfect"));
    digest.add(encode_graph6(g) + (fast ? " 1" : " 0"));
    ++checked;
  };
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) check(gen::from_code(n, code));
  }
  std::mt19937_64 rng(corpus_seed + 3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 7;
    check(gen::random(n, 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng));
  }
  file << json{{"graphs", checked}, {"digest", digest.hex()}}.dump() << '\n';
  v.detail = std::to_string(checked) + " graphs (all n <= 5, 500 random n <= 7), " +
             std::to_string(v.failures.size()) + " disagreements";
  return v;
}

Check criterion4(const fs::path& dir) {
  Check v;
  std::ofstream file(dir / "criterion4_perfect_divisibility.jsonl", std::ios::binary);
  Digest digest;

  std::size_t perfect_count = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = gen::from_code(n, code);
      if (!is_perfect(g).perfect) continue;
      ++perfect_count;
      const auto r = is_perfectly_divisible(g);
      if (!r.divisible) v.fail(encode_graph6(g) + ": perfect but reported not perfectly divisible");
      if (r.divisible && r.b && !r.b->empty()) v.fail(encode_graph6(g) + ": perfect yet B is nonempty");
    }
  }
  digest.add("perfect " + std::to_string(perfect_count));

  const Graph c5 = gen::cycle(5);
  const auto c5r = is_perfectly_divisible(c5);
  bool c5_ok = c5r.divisible && c5r.a && c5r.b;
  if (c5_ok) {
    const VertexSet& a = *c5r.a;
    const VertexSet& b = *c5r.b;
    c5_ok = (a | b) == c5.vertices() && !a.intersects(b) &&
            brute::is_perfect_by_definition(induced_subgraph(c5, a).graph) &&
            brute::clique_number(induced_subgraph(c5, b).graph) < brute::clique_number(c5);
    file << json{{"graph6", "Dhc"}, {"A", a.to_vector()}, {"B", b.to_vector()}}.dump() << '\n';
  }
  if (!c5_ok) v.fail("C5: no verified (A, B) witness");

  std::size_t divisible_count = 0;
  auto check_bound = [&](const Graph& g) {
    const auto r = is_perfectly_divisible(g);
    digest.add(encode_graph6(g) + (r.divisible ? " 1" : " 0"));
    if (!r.divisible) return;
    ++divisible_count;
    const std::size_t omega = max_clique(g).size;
    const std::size_t chi = chromatic_number(g).chi;
    if (chi > omega * (omega + 1) / 2)
      v.fail(encode_graph6(g) + ": chi " + std::to_string(chi) + " > binom(omega+1, 2)");
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) check_bound(gen::from_code(n, code));
  }
  std::mt19937_64 rng(corpus_seed + 4);
  for (std::size_t n = 7; n <= 9; ++n)
    for (int i = 0; i < 400; ++i) check_bound(gen::random(n, 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng));

  file << json{{"perfect_graphs", perfect_count}, {"divisible_checked", divisible_count}, {"digest", digest.hex()}}
              .dump()
       << '\n';
  v.detail = std::to_string(perfect_count) + " perfect graphs n <= 7 all divisible; C5 witness " +
             (c5_ok ? "verified" : "missing") + "; chi <= binom(omega+1,2) on " + std::to_string(divisible_count) +
             " divisible graphs n <= 9";
  return v;
}

Check criterion5(const fs::path& dir) {
  Check v;
  std::ofstream file(dir / "criterion5_ramsey.jsonl", std::ios::binary);

  const auto paley = verify_counterexample(gen::paley(17), 4);
  file << to_json(paley).dump() << '\n';
  if (!(paley.omega_H == 3 && paley.alpha_H == 3 && paley.alpha_G == 3 && paley.omega_G == 3 && paley.chi_lb == 6 &&
        paley.hoang_bound == 9 && paley.verdict == kdiv::Verdict::inconclusive))
    v.fail("Paley(17): unexpected report " + to_json(paley).dump());

  if (verify_counterexample(gen::complete(4), 4).verdict != kdiv::Verdict::invalid) v.fail("K4 not INVALID");
  std::mt19937_64 rng(corpus_seed + 5);
  std::size_t with_k4 = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph h = gen::random(4 + rng() % 13, 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    const auto r = verify_counterexample(h, 4);
    const bool has_k4 = brute::clique_number(h) >= 4;
    with_k4 += has_k4;
    if ((r.verdict == kdiv::Verdict::invalid) != has_k4) v.fail(encode_graph6(h) + ": verdict " + std::string(to_string(r.verdict)));
    file << to_json(r).dump() << '\n';
  }

  const auto found = search_k4_free(17, 3, search_budget, search_seed);
  const auto control = search_k4_free(18, 3, search_budget, search_seed);
  auto search_line = [](const SearchResult& s) {
    return json{{"n", s.graph.order()}, {"violations", s.violations}, {"steps", s.steps}, {"graph6", encode_graph6(s.graph)}};
  };
  file << search_line(found).dump() << '\n' << search_line(control).dump() << '\n';
  const bool found_ok = found.violations == 0 && count_violations(found.graph, 3) == 0 &&
                        max_clique(found.graph).size <= 3 && max_independent_set(found.graph).size <= 3;
  if (!found_ok) v.fail("n = 17: search ended with " + std::to_string(found.violations) + " violations");
  if (control.violations == 0) v.fail("n = 18: search reported a K4-free graph with alpha <= 3");

  v.detail = "Paley(17) report exact; " + std::to_string(with_k4) + "/100 fuzz graphs with a K4 all INVALID; n=17 " +
             std::to_string(found.violations) + " violations after " + std::to_string(found.steps) + " steps, n=18 " +
             std::to_string(control.violations) + " (negative control)";
  return v;
}

Check criterion7() {
  Check v;
  std::size_t checked = 0;
  auto round_trip = [&](const Graph& g) {
    const std::string text = encode_graph6(g);
    const Graph back = parse_graph6(text);
    if (!(back == g) || encode_graph6(back) != text) v.fail(text + ": round trip mismatch");
    ++checked;
  };
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) round_trip(gen::from_code(n, code));
  }
  std::mt19937_64 rng(corpus_seed + 7);
  for (int i = 0; i < 1000; ++i) round_trip(gen::random(rng() % 33, static_cast<double>(rng() % 1001) / 1000.0, rng));
  v.detail = std::to_string(checked) + " graphs (all n <= 6, 1000 random n <= 32)";
  return v;
}

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t) {
  return std::chrono::duration<double>(clock_type::now() - t).count();
}

struct Run {
  CorpusVerdicts corpus;
  Check c3, c4, c5;
  double corpus_seconds = 0, c3_seconds = 0, c4_seconds = 0, c5_seconds = 0;
};

Run run_all(const fs::path& dir) {
  fs::create_directories(dir);
  Run r;
  auto t = clock_type::now();
  r.corpus = run_corpus(dir);
  r.corpus_seconds = seconds_since(t);
  t = clock_type::now();
  r.c3 = criterion3(dir);
  r.c3_seconds = seconds_since(t);
  t = clock_type::now();
  r.c4 = criterion4(dir);
  r.c4_seconds = seconds_since(t);
  t = clock_type::now();
  r.c5 = criterion5(dir);
  r.c5_seconds = seconds_since(t);
  return r;
}

Check compare_runs(const fs::path& first, const fs::path& second) {
  Check v;
  std::size_t files = 0;
  std::vector<fs::path> names;
  for (const auto& entry : fs::directory_iterator(first)) names.push_back(entry.path().filename());
  std::sort(names.begin(), names.end());
  for (const auto& name : names) {
    std::ifstream a(first / name, std::ios::binary);
    std::ifstream b(second / name, std::ios::binary);
    const std::string text_a{std::istreambuf_iterator<char>(a), {}};
    const std::string text_b{std::istreambuf_iterator<char>(b), {}};
    if (!b || text_a != text_b) v.fail(name.string() + " differs between runs");
    ++files;
  }
  if (files < 5) v.fail("expected 5 certificate files, found " + std::to_string(files));
  v.detail = std::to_string(files) + " certificate files byte-identical across two runs";
  return v;
}

bool report(int number, const std::string& name, const Check& v, double seconds) {
  std::cout << "criterion " << number << " " << (v.pass ? "PASS" : "FAIL") << "  " << name << ": " << v.detail << " ["
            << std::fixed << std::setprecision(1) << seconds << " s]" << std::endl;
  for (const auto& f : v.failures) std::cout << "    " << f << '\n';
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
  const auto start = clock_type::now();
  const Run first = run_all(out / "run1");

  auto t = clock_type::now();
  const Check c7 = criterion7();
  const double c7_seconds = seconds_since(t);

  t = clock_type::now();
  run_all(out / "run2");
  const Check c6 = compare_runs(out / "run1", out / "run2");
  const double c6_seconds = seconds_since(t);

  bool ok = true;
  ok &= report(1, "division on even-hole-free corpus", first.corpus.divide, first.corpus_seconds);
  ok &= report(2, "colouring bound 3^(omega-1)", first.corpus.color, first.corpus_seconds);
  ok &= report(3, "perfection oracle vs definition", first.c3, first.c3_seconds);
  ok &= report(4, "perfect divisibility oracle", first.c4, first.c4_seconds);
  ok &= report(5, "Ramsey substitute checks", first.c5, first.c5_seconds);
  ok &= report(6, "determinism", c6, c6_seconds);
  ok &= report(7, "graph6 round trips", c7, c7_seconds);
  std::cout << (ok ? "all criteria PASS" : "some criteria FAIL") << " in " << std::fixed << std::setprecision(1)
            << seconds_since(start) << " s" << std::endl;
  return ok ? 0 : 1;
}
