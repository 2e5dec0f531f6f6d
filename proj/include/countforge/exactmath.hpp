#ifndef COUNTFORGE_EXACTMATH_HPP
#define COUNTFORGE_EXACTMATH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace countforge {

// Exact scalars. mpq_class keeps every value canonical (reduced, positive
// denominator, zero as 0/1), which is the invariant the rest of the library
// relies on for structural equality.
using Integer = mpz_class;
using Rational = mpq_class;

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

// `<int>` or `<int>/<uint>`; the sign may only appear on the numerator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

// Dense univariate polynomial over Rational. Coefficient i multiplies v^i.
// Trailing zeros are trimmed on every mutation, so the zero polynomial has
// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);

  static Poly constant(const Rational& c);
  // v
  static Poly identity();
  // (v - root)
  static Poly linear_factor(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // Zero beyond the degree.
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& v) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);
  Poly& operator/=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const Poly& p);

using InterpolationPoint = std::pair<Rational, Rational>;

// Unique polynomial of degree < points.size() through every point.
// Throws DuplicateNode on a repeated x-coordinate, InvalidArgument on an
// empty list.
Poly lagrange_interpolate(std::span<const InterpolationPoint> points);

// q(u) = p(u + a).
Poly shift_substitute(const Poly& p, const Rational& a);

// r (r-1) ... (r-count+1); the empty product is 1.
Rational falling_factorial(const Rational& r, unsigned count);

}  // namespace countforge

#endif  // COUNTFORGE_EXACTMATH_HPP
