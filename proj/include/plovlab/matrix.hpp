#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "plovlab/poly.hpp"
#include "plovlab/rational.hpp"

namespace plovlab {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_integer() const;
  RatMatrix transpose() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  /// Matrix times column vector.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix pow(const RatMatrix& m, long e);
/// Kronecker product; (a ⊗ b)(i*rb + k, j*cb + l) = a(i,j) b(k,l).
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
/// Block diagonal a ⊕ b.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

Rational determinant(const RatMatrix& m);
/// Throws DimensionError on non-square, std::domain_error on singular input.
RatMatrix inverse(const RatMatrix& m);

struct RankNullspace {
  int rank = 0;
  std::vector<std::vector<Rational>> kernel;  // basis of the right kernel
};
RankNullspace rank_and_nullspace(const RatMatrix& m);
int rank(const RatMatrix& m);

/// det(xI - M), monic of degree size(M). Faddeev–LeVerrier over the rationals.
QPoly char_poly(const RatMatrix& m);

/// Evaluates a polynomial at a square matrix (Horner).
RatMatrix eval_at(const QPoly& p, const RatMatrix& m);

/// Signature counts of a symmetric matrix computed by exact congruence diagonalization.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
/// Throws PreconditionError if m is not symmetric.
Inertia inertia(const RatMatrix& m);

}  // namespace plovlab
