#include "plovlab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace plovlab {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RatMatrix::is_integer() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionError("matrix-vector length mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int j = 0; j < cols_; ++j) {
    const Rational& x = v[static_cast<std::size_t>(j)];
    if (x.is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      if (!(*this)(i, j).is_zero()) out[static_cast<std::size_t>(i)] += (*this)(i, j) * x;
    }
  }
  return out;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMatrix pow(const RatMatrix& m, long e) {
  if (!m.is_square()) throw DimensionError("matrix power of non-square matrix");
  if (e < 0) return pow(inverse(m), -e);
  RatMatrix result = RatMatrix::identity(m.rows());
  RatMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    Rational inv = Rational(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RankNullspace rank_and_nullspace(const RatMatrix& m) {
  RatMatrix work = m;
  std::vector<int> pivots = rref(work);
  RankNullspace out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -work(static_cast<int>(r), free);
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int rank(const RatMatrix& m) {
  RatMatrix work = m;
  return static_cast<int>(rref(work).size());
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  RatMatrix a = m;
  const int n = a.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return Rational(0);
    if (p != col) {
      for (int c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Rational f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

QPoly char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  // Faddeev–LeVerrier: M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  RatMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    RatMatrix am = m * mk;
    Rational tr;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Rational(k);
  }
  return QPoly(std::move(c));
}

RatMatrix eval_at(const QPoly& p, const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("polynomial evaluation at non-square matrix");
  const int n = m.rows();
  RatMatrix acc(n, n);
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Inertia inertia(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inertia of non-square matrix");
  if (!(m == m.transpose())) throw PreconditionError("inertia requires a symmetric matrix");
  RatMatrix a = m;
  int n = a.rows();
  Inertia out;
  std::vector<int> live(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) live[static_cast<std::size_t>(i)] = i;
  while (!live.empty()) {
    int piv = -1;
    for (int i : live) {
      if (!a(i, i).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      // Zero diagonal: combine two rows/columns by congruence to create a nonzero pivot.
      int pi = -1, pj = -1;
      for (int i : live) {
        for (int j : live) {
          if (i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
        if (pi >= 0) break;
      }
      if (pi < 0) {
        out.zero += static_cast<int>(live.size());
        break;
      }
      for (int c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (int r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    const Rational p = a(piv, piv);
    (p.sign() > 0 ? out.positive : out.negative)++;
    for (int i : live) {
      if (i == piv || a(i, piv).is_zero()) continue;
      Rational f = a(i, piv) / p;
      for (int j : live) a(i, j) -= f * a(piv, j);
    }
    for (int i : live) {
      a(piv, i) = 0;
      a(i, piv) = 0;
    }
    live.erase(std::find(live.begin(), live.end(), piv));
  }
  return out;
}

}  // namespace plovlab
