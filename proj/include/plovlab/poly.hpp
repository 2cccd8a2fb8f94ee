#pragma once

#include <climits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plovlab/rational.hpp"

namespace plovlab {

/// Univariate polynomial with exact rational coefficients, indexed by power.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class QPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c) { return QPoly({c}); }
  static QPoly monomial(const Rational& c, int power);
  /// n + shift
  static QPoly linear(const Rational& shift) { return QPoly({shift, Rational(1)}); }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of n^i (zero beyond the degree).
  Rational coeff(int i) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Euclidean division by a nonzero divisor: returns (quotient, remainder).
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  QPoly derivative() const;
  QPoly monic() const;

  /// Human-readable form in the given variable, highest power first, e.g. "x^2 - 3*x + 1".
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

QPoly pow(const QPoly& p, int e);
QPoly gcd(QPoly a, QPoly b);

/// C(n + shift, m) as a polynomial in n of degree m.
QPoly binomial_poly(int m, int shift);

/// Unique polynomial of degree < points.size() through the given samples (Newton divided differences).
/// Throws PreconditionError for an empty list or duplicate abscissae.
QPoly interpolate(std::span<const std::pair<long, Rational>> points);

}  // namespace plovlab
