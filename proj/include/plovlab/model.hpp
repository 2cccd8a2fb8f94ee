#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "plovlab/matrix.hpp"
#include "plovlab/spectral.hpp"

namespace plovlab {

/// Coordinates of a (1,1)-class in a model basis.
class ClassVec {
 public:
  ClassVec() = default;
  explicit ClassVec(std::size_t h) : coords_(h) {}
  explicit ClassVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static ClassVec basis(std::size_t h, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  ClassVec& operator+=(const ClassVec& o);
  ClassVec& operator-=(const ClassVec& o);
  ClassVec& operator*=(const Rational& s);
  friend ClassVec operator+(ClassVec a, const ClassVec& b) { return a += b; }
  friend ClassVec operator-(ClassVec a, const ClassVec& b) { return a -= b; }
  friend ClassVec operator*(const Rational& s, ClassVec a) { return a *= s; }
  friend bool operator==(const ClassVec& a, const ClassVec& b) = default;

 private:
  std::vector<Rational> coords_;
};

ClassVec operator*(const RatMatrix& m, const ClassVec& v);

class IntersectionModel;

/// Explicit symmetric tensor: sorted d-multisets of basis indices → value.
struct SparseTensorForm {
  std::map<std::vector<int>, Rational> entries;
};

/// Complex torus of dimension d; basis b_{ij} = e_i ∧ ē_j at index i*d + j (0-based).
/// I(b_{i₁j₁},…,b_{i_dj_d}) = sgn(σ)·sgn(τ) when (i_l) = σ and (j_l) = τ are permutations, else 0.
struct TorusForm {
  int dim = 0;
};

/// I(x,…,x) = c·q(x,x)^{half_dim}, polarized over perfect pairings of the 2·half_dim slots.
struct FujikiForm {
  RatMatrix q;
  Rational c;
  int half_dim = 1;
};

/// Carrier V₁ ⊕ V₂ of a product, I = Σ_{|S| = d₁} I₁(γ_S)·I₂(γ_{S^c}).
struct ProductForm {
  std::shared_ptr<const IntersectionModel> first;
  std::shared_ptr<const IntersectionModel> second;
};

using IntersectionForm = std::variant<SparseTensorForm, TorusForm, FujikiForm, ProductForm>;

enum class ModelKind { geometric, synthetic };

/// (V, I, ω): an h-dimensional rational space with a symmetric d-linear form and a distinguished class.
class IntersectionModel {
 public:
  /// Throws DimensionError on inconsistent sizes and PreconditionError when I(ω^d) ≤ 0.
  IntersectionModel(int complex_dim, std::vector<std::string> labels, IntersectionForm form, ClassVec kahler,
                    ModelKind kind);

  int complex_dim() const { return d_; }
  int h() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntersectionForm& form() const { return form_; }
  const ClassVec& kahler() const { return kahler_; }
  ModelKind kind() const { return kind_; }
  bool is_torus() const { return std::holds_alternative<TorusForm>(form_); }
  bool is_product() const { return std::holds_alternative<ProductForm>(form_); }
  bool is_fujiki() const { return std::holds_alternative<FujikiForm>(form_); }
  /// Matrix of f* on H^{1,0} for torus models built from one.
  const std::optional<RatMatrix>& h10_matrix() const { return h10_; }

  /// Symmetric multilinear value I(c₁,…,c_d). Throws DimensionError on arity/length mismatch.
  Rational eval(std::span<const ClassVec> classes) const;
  Rational eval(std::initializer_list<ClassVec> classes) const {
    return eval(std::span<const ClassVec>(classes.begin(), classes.size()));
  }
  /// I(c,…,c)
  Rational self_intersection(const ClassVec& c) const;

  /// Same model with another distinguished class (validated like the constructor).
  IntersectionModel with_kahler(ClassVec kahler) const;

  void set_h10_matrix(RatMatrix a) { h10_ = std::move(a); }
  ClassVec zero_class() const { return ClassVec(static_cast<std::size_t>(h())); }
  ClassVec basis_class(int i) const { return ClassVec::basis(static_cast<std::size_t>(h()), static_cast<std::size_t>(i)); }

 private:
  int d_;
  std::vector<std::string> labels_;
  IntersectionForm form_;
  ClassVec kahler_;
  ModelKind kind_;
  std::optional<RatMatrix> h10_;
};

/// Matrix F of f* on V, acting on column coordinate vectors, with lazily attached unipotent data.
struct AutoAction {
  RatMatrix matrix;
  std::optional<UnipotentCert> cert;

  explicit AutoAction(RatMatrix f) : matrix(std::move(f)) {}
  /// Certifies quasi-unipotence and attaches the unipotent reduction (throws CertificationError).
  static AutoAction certified(RatMatrix f);
  const UnipotentCert& require_cert() const;
  AutoAction power(long e) const { return AutoAction(pow(matrix, e)); }
};

// Structural evaluators, exposed for the dual-path tests.
Rational eval_torus(int d, std::span<const ClassVec> classes);
Rational eval_sparse(const SparseTensorForm& t, std::span<const ClassVec> classes);
Rational eval_fujiki(const FujikiForm& f, std::span<const ClassVec> classes);

}  // namespace plovlab
