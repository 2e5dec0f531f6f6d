#ifndef COUNTFORGE_VERIFY_HPP
#define COUNTFORGE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "countforge/exactmath.hpp"
#include "countforge/structures.hpp"

namespace countforge::verify {

// SplitMix64: state += 0x9E3779B97F4A7C15, then the xor-shift-multiply
// finaliser with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform on [lo, hi] by reduction modulo the range width.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  // num/den with num in [-max_num, max_num], den in [1, max_den].
  Rational rational(std::int64_t max_num, std::int64_t max_den);
  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den);

 private:
  std::uint64_t state_;
};

// The RNG seed of a suite: the user seed xor the 64-bit FNV-1a hash of the
// suite name.
std::uint64_t suite_seed(std::string_view name, std::uint64_t seed);

Multigraph random_graph(Rng& rng, std::size_t n, std::size_t m, bool loops, bool parallel);
Multigraph random_connected_simple_graph(Rng& rng, std::size_t n, std::size_t m);

struct Failure {
  std::string description;
  std::string expected;
  std::string actual;
};

struct Limits {
  std::size_t trials = 0;  // 0 keeps each suite's own count
  std::size_t max_n = 0;   // 0 keeps each suite's own bound
  std::size_t max_m = 0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  std::optional<double> elapsed_seconds;
  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown name.
Report verify_suite(std::string_view name, std::uint64_t seed, const Limits& limits = {});
std::vector<Report> verify_all(std::uint64_t seed, const Limits& limits = {});

// Rationals and integers are written as strings; elapsed time only when
// `with_timing` is set, so reports for a fixed seed are byte-identical.
std::string to_json(const std::vector<Report>& reports, bool with_timing = false);

}  // namespace countforge::verify

#endif  // COUNTFORGE_VERIFY_HPP
