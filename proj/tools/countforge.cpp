#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "countforge/error.hpp"
#include "countforge/inflate.hpp"
#include "countforge/isetred.hpp"
#include "countforge/oracles.hpp"
#include "countforge/permred.hpp"
#include "countforge/pipelines.hpp"
#include "countforge/reduce_oracle.hpp"
#include "countforge/satchain.hpp"
#include "countforge/textio.hpp"
#include "countforge/verify.hpp"

using namespace countforge;
using json = nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Multigraph read_graph(const std::string& path) { return textio::parse_graph(read_input(path)).graph; }

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("expected a comma-separated list of nonnegative integers, got '" + text + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

json poly_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return coeffs;
}

json cut_json(const oracles::CutCount& c) { return {{"size", c.size}, {"count", to_string(c.count)}}; }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting reductions, graph inflations and their brute-force checks"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string q_text, w_text, x_text, y_text, p_text;
  std::string variant = "z";
  std::string method = "cycles";
  std::string oracle_kind = "subset";
  std::string terminals = "0,1,2";
  std::string spec_text;
  unsigned colours = 3;
  std::size_t k = 2;
  bool balance = false;
  int exit_code = 0;

  // count
  auto* count = app.add_subcommand("count", "Brute-force counts")->require_subcommand(1);
  auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "input file, '-' for stdin"); };
  for (const char* name : {"sat", "nae", "is", "maxcut", "3tmc", "colourings", "reliability"}) {
    auto* sub = count->add_subcommand(name);
    add_input(sub);
    if (std::string(name) == "3tmc") sub->add_option("--terminals", terminals, "three vertices, e.g. 0,1,2");
    if (std::string(name) == "colourings") sub->add_option("--colours", colours);
    if (std::string(name) == "reliability") sub->add_option("--p", p_text, "edge failure probability")->required();
  }

  auto* perm = app.add_subcommand("perm", "Permanent of a matrix or digraph");
  add_input(perm);
  perm->add_option("--method", method)->check(CLI::IsMember({"naive", "ryser", "cycles"}));

  auto* z = app.add_subcommand("z", "Random-cluster partition function")->require_subcommand(1);
  auto* z_eval = z->add_subcommand("eval", "Z(G;q,w); per-edge file weights unless --w is given");
  add_input(z_eval);
  z_eval->add_option("--q", q_text)->required();
  z_eval->add_option("--w", w_text);
  z_eval->add_option("--variant", variant)->check(CLI::IsMember({"z", "z0"}));

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial")->require_subcommand(1);
  auto* tutte_eval = tutte->add_subcommand("eval");
  add_input(tutte_eval);
  tutte_eval->add_option("--x", x_text)->required();
  tutte_eval->add_option("--y", y_text)->required();

  auto* reduce = app.add_subcommand("reduce", "Instance transformations")->require_subcommand(1);
  for (const char* name : {"sat2perm", "sat2is", "is2sat", "sat2nae", "nae2maxcut"}) {
    auto* sub = reduce->add_subcommand(name);
    add_input(sub);
    if (std::string(name) == "sat2perm") sub->add_flag("--balance", balance, "balance literal occurrences first");
  }

  auto* inflate_cmd = app.add_subcommand("inflate", "Graph inflations")->require_subcommand(1);
  for (const char* name : {"stretch", "thicken", "theta", "wump"}) {
    auto* sub = inflate_cmd->add_subcommand(name);
    add_input(sub);
    if (std::string(name) == "stretch" || std::string(name) == "thicken") sub->add_option("--k", k)->required();
    else sub->add_option("--spec", spec_text, "comma-separated lengths or widths")->required();
  }

  auto* pipeline = app.add_subcommand("pipeline", "Interpolation pipelines")->require_subcommand(1);
  for (const char* name : {"thicken-coeffs", "theta-coeffs", "wump-coeffs", "maxcut-ising", "3tmc", "linial", "reliability"}) {
    auto* sub = pipeline->add_subcommand(name);
    add_input(sub);
    const std::string n = name;
    if (n == "thicken-coeffs" || n == "theta-coeffs" || n == "3tmc" || n == "linial") sub->add_option("--q", q_text)->required();
    if (n == "thicken-coeffs" || n == "theta-coeffs" || n == "wump-coeffs") sub->add_option("--w", w_text)->required();
    if (n == "theta-coeffs" || n == "wump-coeffs")
      sub->add_option("--oracle", oracle_kind, "subset (enumeration) or reduce (series/parallel reduction)")
          ->check(CLI::IsMember({"subset", "reduce"}));
    if (n == "3tmc") sub->add_option("--terminals", terminals);
    if (n == "reliability") sub->add_option("--p", p_text)->required();
  }

  std::string suite = "all";
  std::uint64_t seed = 0;
  verify::Limits limits;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite and print a JSON report");
  verify_cmd->add_option("suite", suite, "suite name or 'all'");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", limits.trials);
  verify_cmd->add_option("--max-n", limits.max_n);
  verify_cmd->add_option("--max-m", limits.max_m);
  verify_cmd->add_flag("--timing", timing, "include elapsed seconds");
  app.add_subcommand("suites", "List the suite names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      auto* sub = count->get_subcommands().front();
      const std::string name = sub->get_name();
      if (name == "sat") std::cout << to_string(oracles::count_sat(textio::parse_dimacs(read_input(input)))) << "\n";
      else if (name == "nae") std::cout << to_string(oracles::count_nae(textio::parse_dimacs(read_input(input)))) << "\n";
      else if (name == "is") std::cout << to_string(oracles::count_independent_sets(read_graph(input))) << "\n";
      else if (name == "maxcut") print(cut_json(oracles::count_maxcut(read_graph(input))));
      else if (name == "3tmc") {
        const auto t = parse_list(terminals);
        if (t.size() != 3) throw InvalidArgument("--terminals needs three vertices");
        print(cut_json(oracles::count_3tmc(TerminalTriple{read_graph(input), t[0], t[1], t[2]})));
      } else if (name == "colourings") std::cout << to_string(oracles::count_colourings(read_graph(input), colours)) << "\n";
      else std::cout << to_string(oracles::reliability_bruteforce(read_graph(input), parse_rational(p_text))) << "\n";
    } else if (perm->parsed()) {
      const std::string text = read_input(input);
      const auto m = method == "naive" ? oracles::PermanentMethod::naive
                     : method == "ryser" ? oracles::PermanentMethod::ryser
                                         : oracles::PermanentMethod::cycle_cover;
      const auto start = text.find_first_not_of(" \t\r\n");
      if (start != std::string::npos && text.compare(start, 7, "digraph") == 0)
        std::cout << to_string(oracles::permanent(textio::parse_digraph(text), m)) << "\n";
      else
        std::cout << to_string(oracles::permanent(textio::parse_matrix(text), m)) << "\n";
    } else if (z_eval->parsed()) {
      const auto wg = textio::parse_graph(read_input(input));
      const WeightMap w = w_text.empty() ? wg.weights : uniform_weights(wg.graph, parse_rational(w_text));
      const auto v = variant == "z0" ? oracles::ZVariant::z0 : oracles::ZVariant::z;
      std::cout << to_string(oracles::z_subset_sum(wg.graph, parse_rational(q_text), w, v)) << "\n";
    } else if (tutte_eval->parsed()) {
      std::cout << to_string(oracles::tutte_subset_sum(read_graph(input), parse_rational(x_text), parse_rational(y_text)))
                << "\n";
    } else if (reduce->parsed()) {
      const std::string name = reduce->get_subcommands().front()->get_name();
      if (name == "sat2perm") {
        Cnf f = textio::parse_dimacs(read_input(input));
        if (balance) f = permred::balance_literals(f);
        const auto inst = permred::sat_to_perm_pm1(f);
        std::cout << "# occurrences " << inst.occurrence_count << "\n" << textio::serialize(inst.digraph);
      } else if (name == "sat2is") {
        std::cout << textio::serialize(isetred::sat_to_indset_graph(textio::parse_dimacs(read_input(input))).graph);
      } else if (name == "is2sat") {
        std::cout << textio::serialize(isetred::indset_to_2sat(read_graph(input)));
      } else if (name == "sat2nae") {
        std::cout << textio::serialize(satchain::sat_to_nae(textio::parse_dimacs(read_input(input))).formula);
      } else {
        const auto inst = satchain::nae_to_maxcut(textio::parse_dimacs(read_input(input)));
        std::cout << "# target " << inst.target << "\n" << textio::serialize(inst.graph);
      }
    } else if (inflate_cmd->parsed()) {
      const std::string name = inflate_cmd->get_subcommands().front()->get_name();
      const Multigraph g = read_graph(input);
      if (name == "stretch") std::cout << textio::serialize(inflate::stretch(g, k));
      else if (name == "thicken") std::cout << textio::serialize(inflate::thicken(g, k));
      else if (name == "theta") std::cout << textio::serialize(inflate::inflate(g, inflate::theta_graph(parse_list(spec_text))));
      else std::cout << textio::serialize(inflate::inflate(g, inflate::wump_graph(parse_list(spec_text))));
    } else if (pipeline->parsed()) {
      const std::string name = pipeline->get_subcommands().front()->get_name();
      const Multigraph g = read_graph(input);
      if (name == "thicken-coeffs") {
        const Rational q = parse_rational(q_text), w = parse_rational(w_text);
        print(poly_json(pipelines::coeffs_by_thickening(
            g, q, w, [&](const Multigraph& h) { return oracles::z_subset_sum(h, q, w, oracles::ZVariant::z); })));
      } else if (name == "theta-coeffs") {
        const Rational q = parse_rational(q_text), w = parse_rational(w_text);
        print(poly_json(pipelines::coeffs_by_theta(g, q, w, [&](const Multigraph& h) {
          return oracle_kind == "reduce" ? reduce::z_reduced(h, q, w, oracles::ZVariant::z)
                                         : oracles::z_subset_sum(h, q, w, oracles::ZVariant::z);
        })));
      } else if (name == "wump-coeffs") {
        const Rational w = parse_rational(w_text);
        print(poly_json(pipelines::coeffs_by_wump(g, w, [&](const Multigraph& h) {
          return oracle_kind == "reduce" ? reduce::z_reduced(h, 0, w, oracles::ZVariant::z0)
                                         : oracles::z_subset_sum(h, 0, w, oracles::ZVariant::z0);
        })));
      } else if (name == "maxcut-ising") {
        const auto r = pipelines::maxcut_from_ising(g);
        json dist = json::array();
        for (const auto& c : r.distribution) dist.push_back(to_string(c));
        print({{"maxcut", cut_json(r.maxcut)}, {"distribution", dist}});
      } else if (name == "3tmc") {
        const auto t = parse_list(terminals);
        if (t.size() != 3) throw InvalidArgument("--terminals needs three vertices");
        std::cout << to_string(pipelines::tmc3_from_z0(TerminalTriple{g, t[0], t[1], t[2]}, parse_rational(q_text))) << "\n";
      } else if (name == "linial") {
        const Rational q = parse_rational(q_text);
        std::cout << to_string(pipelines::chromatic3_via_linial(
                         g, q, [&](const Multigraph& h) { return oracles::chromatic_polynomial(h)(q); }))
                  << "\n";
      } else {
        std::cout << to_string(pipelines::reliability_from_tutte(g, parse_rational(p_text))) << "\n";
      }
    } else if (verify_cmd->parsed()) {
      std::vector<verify::Report> reports;
      if (suite == "all") reports = verify::verify_all(seed, limits);
      else reports.push_back(verify::verify_suite(suite, seed, limits));
      std::cout << verify::to_json(reports, timing);
      for (const auto& r : reports)
        if (!r.passed()) exit_code = 1;
    } else {
      for (const auto& name : verify::suite_names()) std::cout << name << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "countforge: parse error, " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "countforge: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
