// One PASS/FAIL line per acceptance criterion. Every check is exact; the
// time bounds below are the wall-clock limits each criterion must meet.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "countforge/isetred.hpp"
#include "countforge/oracles.hpp"
#include "countforge/permred.hpp"
#include "countforge/pipelines.hpp"
#include "countforge/satchain.hpp"
#include "countforge/verify.hpp"

using namespace countforge;
using oracles::PermanentMethod;

namespace {

constexpr double kBound1 = 1;
constexpr double kBound2 = 10;
constexpr double kBound3 = 60;
constexpr double kBound4 = 1;
constexpr double kBound5 = 60;
constexpr double kBound6 = 300;
constexpr double kBound7 = 120;
constexpr double kBound8 = 300;
constexpr double kBound9 = 120;
constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double bound, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > bound) out.fail("exceeded " + std::to_string(bound) + " s");
  if (!out.ok) ++failures;
  std::printf("%s %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs, out.ok ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
}

void run_suites(Outcome& out, const std::vector<std::string>& names, const verify::Limits& limits = {}) {
  for (const auto& name : names) {
    const verify::Report r = verify::verify_suite(name, kSeed, limits);
    if (!r.passed()) {
      const auto& f = r.failures.front();
      out.fail(name + ": " + f.description + " expected " + f.expected + " got " + f.actual);
    }
  }
}

Clause sign_pattern(int mask) {
  Clause c;
  for (int v = 1; v <= 3; ++v) c.push_back((mask >> (v - 1)) & 1 ? -v : v);
  return c;
}

std::vector<Cnf> sat_corpus() {
  std::vector<Cnf> out;
  for (int n = 0; n <= 3; ++n) out.push_back(Cnf{n, {}});
  for (int a = 0; a < 8; ++a) out.push_back(Cnf{3, {sign_pattern(a)}});
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b) out.push_back(Cnf{3, {sign_pattern(a), sign_pattern(b)}});
  return out;
}

Rational signed_sum(const Cnf& f) {
  Rational total = 0;
  for (unsigned sigma = 0; sigma < (1u << f.num_vars); ++sigma) {
    long falses = 0, trues = 0;
    bool sat = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (Literal l : c) {
        const bool t = (((sigma >> (std::abs(l) - 1)) & 1) != 0) == (l > 0);
        any = any || t;
        ++(t ? trues : falses);
      }
      sat = sat && any;
    }
    if (sat) total += pow(Rational(-1), falses) * pow(Rational(2), trues);
  }
  return total;
}

std::string run_cli(const std::string& cli) {
  FILE* pipe = popen((cli + " verify all --seed 7").c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "reliability of C5 at 1/3 is 112/243 by brute force and through Tutte", kBound1, [](Outcome& out) {
    const Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const Rational expected(112, 243);
    if (oracles::reliability_bruteforce(c5, Rational(1, 3)) != expected) out.fail("brute force");
    if (pipelines::reliability_from_tutte(c5, Rational(1, 3)) != expected) out.fail("Tutte route");
  });

  criterion(2, "permanent naive/Ryser/cycle-cover agree on 200 seeded {-1,0,1} matrices, n <= 7", kBound2,
            [](Outcome& out) {
              verify::Rng rng(verify::suite_seed("acceptance-permanent", kSeed));
              for (int t = 0; t < 200; ++t) {
                const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
                RationalMatrix a(n, n);
                for (std::size_t r = 0; r < n; ++r)
                  for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(static_cast<long>(rng.uniform(-1, 1)));
                const Rational naive = oracles::permanent(a, PermanentMethod::naive);
                if (naive != oracles::permanent(a, PermanentMethod::ryser) ||
                    naive != oracles::permanent(a, PermanentMethod::cycle_cover))
                  out.fail("disagreement at trial " + std::to_string(t));
              }
            });

  criterion(3, "permanent reduction: per = (-2)^i #SAT balanced, signed sum unbalanced", kBound3, [](Outcome& out) {
    std::vector<Cnf> corpus;
    for (int n = 0; n <= 3; ++n) corpus.push_back(Cnf{n, {}});
    for (int a = 0; a < 8; ++a) corpus.push_back(Cnf{3, {sign_pattern(a)}});
    for (const auto& f : corpus) {
      const Cnf balanced = permred::balance_literals(f);
      const auto inst = permred::sat_to_perm_pm1(balanced);
      const Rational per = oracles::permanent(inst.digraph, PermanentMethod::cycle_cover);
      if (per != pow(Rational(-2), static_cast<long>(inst.occurrence_count)) * Rational(oracles::count_sat(f)))
        out.fail("balanced identity");
      const auto raw = permred::sat_to_perm_pm1(f);
      if (oracles::permanent(raw.digraph, PermanentMethod::cycle_cover) != signed_sum(f)) out.fail("unbalanced identity");
    }
  });

  criterion(4, "equality gadget table [2, 0, 0, -1]; clause gadget blocks only all-three-outer", kBound4,
            [](Outcome& out) {
              const auto eq = permred::equality_gadget_table();
              if (eq[0] != 2 || eq[1] != 0 || eq[2] != 0 || eq[3] != -1) out.fail("equality table");
              const auto cl = permred::clause_gadget_table();
              if (cl[7] != 0) out.fail("mask 7 not blocked");
              for (int m = 0; m < 7; ++m)
                if (cl[m] == 0 || cl[m] != cl[0]) out.fail("mask " + std::to_string(m));
            });

  criterion(5, "independent-set parity matches #SAT; 3n+8m vertices, 3n+49m edges", kBound5, [](Outcome& out) {
    for (const auto& f : sat_corpus()) {
      const auto inst = isetred::sat_to_indset_graph(f);
      const std::size_t n = inst.n_src, m = inst.m_src;
      if (inst.graph.vertex_count() != 3 * n + 8 * m || inst.graph.edge_count() != 3 * n + 49 * m) out.fail("sizes");
      const Integer is = oracles::count_independent_sets(inst.graph);
      const Integer sat = oracles::count_sat(f);
      if (Integer(is % 2) != Integer(sat % 2)) out.fail("parity");
    }
  });

  criterion(6, "identity suite, 100 seeded trials each", kBound6, [](Outcome& out) {
    run_suites(out,
               {"z-proxy", "tutte-conversion", "delcon", "thickening-identity", "stretch-identity", "theta-identity",
                "wump-identity", "ising-cuts"},
               verify::Limits{100, 0, 0});
  });

  criterion(7, "theta shifts distinct for m <= 50 on 6 (q,w); wump shifts distinct for m <= 50", kBound7,
            [](Outcome& out) { run_suites(out, {"generator-distinctness"}); });

  criterion(8, "pipelines equal direct coefficients and counts", kBound8, [](Outcome& out) {
    run_suites(out, {"thickening-pipeline", "theta-pipeline", "wump-pipeline", "tmc3-pipeline", "maxcut-ising"});
  });

  criterion(9, "NAE and max-cut chain; Linial identity and chi(G;3) routes", kBound9, [](Outcome& out) {
    for (const auto& f : sat_corpus()) {
      const Integer sat = oracles::count_sat(f);
      const auto nae = satchain::sat_to_nae(f);
      const Integer nae_count = oracles::count_nae(nae.formula);
      if (nae_count != 2 * (sat + 1)) out.fail("count_nae relation");
      const auto mc = satchain::nae_to_maxcut(nae.formula);
      const std::size_t m = mc.graph.edge_count();
      const std::size_t expect_target = 2 * nae.formula.clauses.size() + static_cast<std::size_t>(nae.formula.num_vars);
      if (mc.target != expect_target) out.fail("target k = 2m + n");
      if (oracles::count_maxcut(mc.graph, 40) != oracles::CutCount{mc.target, nae_count}) out.fail("max-cut count");
      const Integer stretched = nae_count * pow(Integer(3), m - mc.target);
      if (oracles::count_maxcut(satchain::maxcut_to_simple(mc.graph), 40) != oracles::CutCount{2 * m + mc.target, stretched})
        out.fail("3-stretch factor");
    }
    run_suites(out, {"linial"});
  });

  criterion(10, "verify all --seed 7 twice gives byte-identical reports", 1e9, [&](Outcome& out) {
    const std::string a = verify::to_json(verify::verify_all(kSeed));
    const std::string b = verify::to_json(verify::verify_all(kSeed));
    if (a != b) out.fail("library reports differ");
    if (!cli.empty()) {
      const std::string c = run_cli(cli);
      const std::string d = run_cli(cli);
      if (c.empty() || c != d) out.fail("CLI reports differ");
      if (c != a) out.fail("CLI report differs from library report");
    }
  });

  return failures == 0 ? 0 : 1;
}
