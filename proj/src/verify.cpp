#include "countforge/verify.hpp"

#include <chrono>
#include <json.hpp>

#include "countforge/error.hpp"
#include "verify_internal.hpp"

namespace countforge::verify {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % width);
}

Rational Rng::rational(std::int64_t max_num, std::int64_t max_den) {
  const long num = static_cast<long>(uniform(-max_num, max_num));
  const long den = static_cast<long>(uniform(1, max_den));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
  while (true) {
    Rational r = rational(max_num, max_den);
    if (r != 0) return r;
  }
}

std::uint64_t suite_seed(std::string_view name, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return seed ^ h;
}

Multigraph random_graph(Rng& rng, std::size_t n, std::size_t m, bool loops, bool parallel) {
  Multigraph g(n);
  if (n == 0) return g;
  std::size_t attempts = 0;
  while (g.edge_count() < m && attempts++ < 64 * (m + 1)) {
    const auto u = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const auto v = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    if (u == v && !loops) continue;
    if (!parallel) {
      const Edge probe{std::min(u, v), std::max(u, v)};
      bool seen = false;
      for (const auto& e : g.edges()) seen = seen || e == probe;
      if (seen) continue;
    }
    g.add_edge(u, v);
  }
  return g;
}

Multigraph random_connected_simple_graph(Rng& rng, std::size_t n, std::size_t m) {
  Multigraph g(n);
  // Random spanning tree first, then extra simple edges.
  for (VertexId v = 1; v < n; ++v) g.add_edge(static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(v) - 1)), v);
  const std::size_t cap = n * (n - 1) / 2;
  std::size_t attempts = 0;
  while (g.edge_count() < std::min(m, cap) && attempts++ < 64 * (m + 1)) {
    const auto u = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const auto v = static_cast<VertexId>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    if (u == v) continue;
    const Edge probe{std::min(u, v), std::max(u, v)};
    bool seen = false;
    for (const auto& e : g.edges()) seen = seen || e == probe;
    if (!seen) g.add_edge(u, v);
  }
  return g;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : detail::registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

Report verify_suite(std::string_view name, std::uint64_t seed, const Limits& limits) {
  for (const auto& s : detail::registry()) {
    if (name != s.name) continue;
    Report report;
    report.suite = s.name;
    report.seed = seed;
    detail::Context ctx(suite_seed(name, seed), limits, report);
    const auto start = std::chrono::steady_clock::now();
    try {
      s.run(ctx);
    } catch (const std::exception& e) {
      report.failures.push_back({"suite aborted", "completion", e.what()});
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

std::vector<Report> verify_all(std::uint64_t seed, const Limits& limits) {
  std::vector<Report> out;
  for (const auto& name : suite_names()) out.push_back(verify_suite(name, seed, limits));
  return out;
}

std::string to_json(const std::vector<Report>& reports, bool with_timing) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["passed"] = r.passed();
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      failures.push_back({{"case", f.description}, {"expected", f.expected}, {"actual", f.actual}});
    }
    j["failures"] = std::move(failures);
    if (with_timing && r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace countforge::verify
