#ifndef COUNTFORGE_SRC_VERIFY_INTERNAL_HPP
#define COUNTFORGE_SRC_VERIFY_INTERNAL_HPP

#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "countforge/oracles.hpp"
#include "countforge/verify.hpp"

namespace countforge::verify::detail {

inline std::string show(const Rational& v) { return to_string(v); }
inline std::string show(const Integer& v) { return to_string(v); }
inline std::string show(const Poly& v) { return to_string(v); }
inline std::string show(const oracles::CutCount& c) { return "(" + std::to_string(c.size) + ", " + to_string(c.count) + ")"; }
inline std::string show(std::size_t v) { return std::to_string(v); }
inline std::string show(bool v) { return v ? "true" : "false"; }
inline std::string show(const std::string& v) { return v; }

class Context {
 public:
  Context(std::uint64_t seed, const Limits& limits, Report& report) : rng(seed), limits_(limits), report_(report) {}

  std::size_t trials(std::size_t fallback) const { return limits_.trials ? limits_.trials : fallback; }
  std::size_t max_n(std::size_t fallback) const { return limits_.max_n ? std::min(limits_.max_n, fallback) : fallback; }
  std::size_t max_m(std::size_t fallback) const { return limits_.max_m ? std::min(limits_.max_m, fallback) : fallback; }

  void check(bool ok, const std::string& what, const std::string& expected, const std::string& actual) {
    ++report_.trials;
    if (!ok) report_.failures.push_back({what, expected, actual});
  }

  template <class A, class B>
  void expect_eq(const A& expected, const B& actual, const std::string& what) {
    check(expected == actual, what, show(expected), show(actual));
  }

  // Runs one case; an escaping exception is a failure of that case.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what, "no exception", e.what());
    }
  }

  template <class E>
  void expect_throw(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const E&) {
      check(true, what, "", "");
      return;
    } catch (const std::exception& e) {
      check(false, what, "specific exception", e.what());
      return;
    }
    check(false, what, "exception", "returned normally");
  }

  Rng rng;

 private:
  Limits limits_;
  Report& report_;
};

using SuiteFn = void (*)(Context&);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry();

}  // namespace countforge::verify::detail

#endif  // COUNTFORGE_SRC_VERIFY_INTERNAL_HPP
