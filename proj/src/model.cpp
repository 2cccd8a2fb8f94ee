#include "plovlab/model.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace plovlab {

ClassVec ClassVec::basis(std::size_t h, std::size_t i) {
  ClassVec v(h);
  v.coords_.at(i) = 1;
  return v;
}

bool ClassVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.is_zero(); });
}

ClassVec& ClassVec::operator+=(const ClassVec& o) {
  if (o.size() != size()) throw DimensionError("class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ClassVec& ClassVec::operator-=(const ClassVec& o) {
  if (o.size() != size()) throw DimensionError("class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ClassVec& ClassVec::operator*=(const Rational& s) {
  for (auto& x : coords_) x *= s;
  return *this;
}

ClassVec operator*(const RatMatrix& m, const ClassVec& v) { return ClassVec(m.apply(v.coords())); }

Rational eval_torus(int d, std::span<const ClassVec> classes) {
  const auto dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  const std::uint32_t mask = (1u << d) - 1;
  // State: coefficients of e_S ∧ ē_T for subsets S, T of equal size, keyed by S | T << d.
  std::vector<std::pair<std::uint32_t, Rational>> cur{{0u, Rational(1)}};
  std::vector<std::pair<std::uint32_t, Rational>> next;
  thread_local std::vector<int> slot;
  slot.assign(std::size_t{1} << (2 * d), -1);
  struct Entry {
    int i, j;
    const Rational* value;
  };
  std::vector<Entry> nz;
  for (const ClassVec& c : classes) {
    if (c.size() != dd) throw DimensionError("torus class has wrong length");
    nz.clear();
    for (std::size_t idx = 0; idx < dd; ++idx) {
      if (!c[idx].is_zero()) nz.push_back({static_cast<int>(idx) / d, static_cast<int>(idx) % d, &c[idx]});
    }
    next.clear();
    for (const auto& [key, coef] : cur) {
      const std::uint32_t s = key & mask;
      const std::uint32_t t = key >> d;
      for (const Entry& e : nz) {
        if (((s >> e.i) & 1u) || ((t >> e.j) & 1u)) continue;
        const int swaps = std::popcount(s >> (e.i + 1)) + std::popcount(t >> (e.j + 1));
        const std::uint32_t nkey = (s | (1u << e.i)) | ((t | (1u << e.j)) << d);
        Rational term = coef * *e.value;
        if (swaps & 1) term = -term;
        int& sl = slot[nkey];
        if (sl < 0) {
          sl = static_cast<int>(next.size());
          next.emplace_back(nkey, std::move(term));
        } else {
          next[static_cast<std::size_t>(sl)].second += term;
        }
      }
    }
    for (const auto& kv : next) slot[kv.first] = -1;
    std::swap(cur, next);
    if (cur.empty()) return Rational(0);
  }
  const std::uint32_t full = mask | (mask << d);
  for (const auto& [key, coef] : cur) {
    if (key == full) return coef;
  }
  return Rational(0);
}

Rational eval_sparse(const SparseTensorForm& t, std::span<const ClassVec> classes) {
  Rational total;
  std::vector<int> perm;
  for (const auto& [idx, val] : t.entries) {
    perm = idx;  // sorted, so next_permutation visits each distinct arrangement once
    Rational acc;
    do {
      Rational prod = 1;
      for (std::size_t l = 0; l < perm.size() && !prod.is_zero(); ++l) {
        prod *= classes[l][static_cast<std::size_t>(perm[l])];
      }
      acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!acc.is_zero()) total += val * acc;
  }
  return total;
}

Rational eval_fujiki(const FujikiForm& f, std::span<const ClassVec> classes) {
  const std::size_t slots = classes.size();
  const auto h = static_cast<std::size_t>(f.q.rows());
  std::vector<Rational> qv(slots * slots);
  for (std::size_t a = 0; a < slots; ++a) {
    auto qa = f.q.apply(classes[a].coords());
    for (std::size_t b = a + 1; b < slots; ++b) {
      Rational s;
      for (std::size_t i = 0; i < h; ++i) s += qa[i] * classes[b][i];
      qv[a * slots + b] = s;
    }
  }
  std::vector<bool> used(slots, false);
  std::function<Rational()> pairings = [&]() -> Rational {
    std::size_t a = 0;
    while (a < slots && used[a]) ++a;
    if (a == slots) return Rational(1);
    used[a] = true;
    Rational sum;
    for (std::size_t b = a + 1; b < slots; ++b) {
      if (used[b] || qv[a * slots + b].is_zero()) continue;
      used[b] = true;
      sum += qv[a * slots + b] * pairings();
      used[b] = false;
    }
    used[a] = false;
    return sum;
  };
  // Each diagonal pairing contributes q(x,x)^{d'}; there are (2d'−1)!! pairings.
  mpz_class double_factorial = 1;
  for (long m = 2L * f.half_dim - 1; m > 1; m -= 2) double_factorial *= m;
  return f.c * pairings() / Rational(double_factorial);
}

namespace {

Rational eval_product(const ProductForm& p, std::span<const ClassVec> classes) {
  const IntersectionModel& m1 = *p.first;
  const IntersectionModel& m2 = *p.second;
  const int d = static_cast<int>(classes.size());
  const int d1 = m1.complex_dim();
  const auto h1 = static_cast<std::size_t>(m1.h());
  std::vector<ClassVec> proj1(classes.size()), proj2(classes.size());
  for (std::size_t l = 0; l < classes.size(); ++l) {
    std::vector<Rational> a(classes[l].coords().begin(), classes[l].coords().begin() + static_cast<long>(h1));
    std::vector<Rational> b(classes[l].coords().begin() + static_cast<long>(h1), classes[l].coords().end());
    proj1[l] = ClassVec(std::move(a));
    proj2[l] = ClassVec(std::move(b));
  }
  Rational total;
  std::vector<ClassVec> left, right;
  for (std::uint32_t s = 0; s < (1u << d); ++s) {
    if (std::popcount(s) != d1) continue;
    left.clear();
    right.clear();
    for (int l = 0; l < d; ++l) {
      if ((s >> l) & 1u) {
        left.push_back(proj1[static_cast<std::size_t>(l)]);
      } else {
        right.push_back(proj2[static_cast<std::size_t>(l)]);
      }
    }
    Rational a = m1.eval(left);
    if (a.is_zero()) continue;
    total += a * m2.eval(right);
  }
  return total;
}

}  // namespace

IntersectionModel::IntersectionModel(int complex_dim, std::vector<std::string> labels, IntersectionForm form,
                                     ClassVec kahler, ModelKind kind)
    : d_(complex_dim), labels_(std::move(labels)), form_(std::move(form)), kahler_(std::move(kahler)), kind_(kind) {
  if (d_ < 1) throw DimensionError("complex dimension must be positive");
  if (labels_.empty()) throw DimensionError("model needs a nonempty basis");
  if (kahler_.size() != labels_.size()) throw DimensionError("distinguished class has wrong length");
  if (const auto* t = std::get_if<TorusForm>(&form_)) {
    if (t->dim != d_ || h() != d_ * d_) throw DimensionError("torus model needs h = d^2");
  }
  if (const auto* f = std::get_if<FujikiForm>(&form_)) {
    if (2 * f->half_dim != d_ || f->q.rows() != h() || f->q.cols() != h()) {
      throw DimensionError("Fujiki model needs d = 2·half_dim and an h×h quadratic form");
    }
  }
  if (const auto* p = std::get_if<ProductForm>(&form_)) {
    if (p->first->complex_dim() + p->second->complex_dim() != d_ || p->first->h() + p->second->h() != h()) {
      throw DimensionError("product model dimensions do not add up");
    }
  }
  if (const auto* s = std::get_if<SparseTensorForm>(&form_)) {
    for (const auto& [idx, val] : s->entries) {
      if (static_cast<int>(idx.size()) != d_) throw DimensionError("tensor entry has wrong arity");
      if (!std::is_sorted(idx.begin(), idx.end())) throw PreconditionError("tensor entry indices must be sorted");
      for (int i : idx) {
        if (i < 0 || i >= h()) throw DimensionError("tensor entry index out of range");
      }
    }
  }
  if (self_intersection(kahler_).sign() <= 0) {
    throw PreconditionError("distinguished class must have positive top self-intersection");
  }
}

Rational IntersectionModel::eval(std::span<const ClassVec> classes) const {
  if (static_cast<int>(classes.size()) != d_) {
    throw DimensionError("intersection form takes " + std::to_string(d_) + " classes, got " +
                         std::to_string(classes.size()));
  }
  for (const auto& c : classes) {
    if (static_cast<int>(c.size()) != h()) throw DimensionError("class has wrong length");
    if (c.is_zero()) return Rational(0);
  }
  return std::visit(
      [&](const auto& f) -> Rational {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, SparseTensorForm>) {
          return eval_sparse(f, classes);
        } else if constexpr (std::is_same_v<T, TorusForm>) {
          return eval_torus(f.dim, classes);
        } else if constexpr (std::is_same_v<T, FujikiForm>) {
          return eval_fujiki(f, classes);
        } else {
          return eval_product(f, classes);
        }
      },
      form_);
}

Rational IntersectionModel::self_intersection(const ClassVec& c) const {
  std::vector<ClassVec> args(static_cast<std::size_t>(d_), c);
  return eval(args);
}

IntersectionModel IntersectionModel::with_kahler(ClassVec kahler) const {
  IntersectionModel m(d_, labels_, form_, std::move(kahler), kind_);
  m.h10_ = h10_;
  return m;
}

AutoAction AutoAction::certified(RatMatrix f) {
  AutoAction a(std::move(f));
  a.cert = certify(a.matrix);
  return a;
}

const UnipotentCert& AutoAction::require_cert() const {
  if (!cert) throw CertificationError("automorphism action has not been certified");
  return *cert;
}

}  // namespace plovlab
