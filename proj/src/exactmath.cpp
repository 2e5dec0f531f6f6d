#include "countforge/exactmath.hpp"

#include <cctype>
#include <set>

#include "countforge/error.hpp"

namespace countforge {

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw InvalidArgument("zero raised to a negative power");
    return pow(Rational(1 / base), -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  Rational result(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  result.canonicalize();
  return result;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos && !all_digits(den))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational r;
  r.get_num() = Integer(n, 10);
  r.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }
Poly Poly::identity() { return Poly({Rational(0), Rational(1)}); }
Poly Poly::linear_factor(const Rational& root) { return Poly({Rational(-root), Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::operator()(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly& Poly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw InvalidArgument("polynomial division by zero");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

std::string to_string(const Poly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.coefficients()[i]);
  }
  return out + "]";
}

Poly lagrange_interpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) throw InvalidArgument("interpolation needs at least one point");
  std::set<Rational> seen;
  for (const auto& [x, y] : points)
    if (!seen.insert(x).second) throw DuplicateNode("duplicate interpolation node " + to_string(x));

  const std::size_t n = points.size();
  // full(v) = prod_j (v - x_j), coefficients low to high
  std::vector<Rational> full(n + 1);
  full[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k > 0; --k) full[k] = full[k - 1] - points[j].first * full[k];
    full[0] = -points[j].first * full[0];
  }

  std::vector<Rational> result(n);
  std::vector<Rational> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& xi = points[i].first;
    // synthetic division of full by (v - xi)
    Rational carry = 0;
    for (std::size_t k = n; k > 0; --k) {
      carry = full[k] + carry * xi;
      basis[k - 1] = carry;
    }
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= xi - points[j].first;
    const Rational scale = points[i].second / denom;
    if (scale == 0) continue;
    for (std::size_t k = 0; k < n; ++k) result[k] += scale * basis[k];
  }
  return Poly(std::move(result));
}

Poly shift_substitute(const Poly& p, const Rational& a) {
  // Horner in the shifted variable: q = (...(c_d (u+a) + c_{d-1})(u+a) + ...).
  const Poly step({a, Rational(1)});
  Poly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= step;
    acc += Poly::constant(*it);
  }
  return acc;
}

Rational falling_factorial(const Rational& r, unsigned count) {
  Rational acc = 1;
  for (unsigned i = 0; i < count; ++i) acc *= r - i;
  return acc;
}

}  // namespace countforge
