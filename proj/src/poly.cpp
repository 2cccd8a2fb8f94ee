#include "plovlab/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace plovlab {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

bool QPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  QPoly rem = *this;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {QPoly{}, rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - dd) + 1);
  const Rational lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Rational c = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= dd; ++i) {
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    rem.trim();
  }
  return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly p = *this;
  return p *= Rational(1) / leading();
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QPoly pow(const QPoly& p, int e) {
  QPoly result = QPoly::constant(1);
  for (int i = 0; i < e; ++i) result = result * p;
  return result;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly binomial_poly(int m, int shift) {
  if (m < 0) return {};
  QPoly p = QPoly::constant(1);
  for (int t = 0; t < m; ++t) p = p * QPoly::linear(Rational(shift - t));
  return p * Rational(mpz_class(1), factorial(m));
}

QPoly interpolate(std::span<const std::pair<long, Rational>> points) {
  if (points.empty()) throw PreconditionError("interpolation needs at least one point");
  std::set<long> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) throw PreconditionError("duplicate abscissa " + std::to_string(x));
  }
  const std::size_t m = points.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  // In-place divided differences: dd[i] becomes f[x_0..x_i].
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      Rational denom(points[i].first - points[i - level].first);
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  // Horner on the Newton form.
  QPoly result = QPoly::constant(dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    result = result * QPoly::linear(Rational(-points[i].first)) + QPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace plovlab
