#pragma once

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "plovlab/builders.hpp"

namespace plovlab {

struct ExpectedValue {
  std::string invariant;  // "plov", "gkdim", "k", "order_m"
  long value = 0;
  std::string note;       // where the value comes from
};

struct GalleryEntry {
  std::string name;
  std::string description;
  std::function<ModelWithAction()> build;
  std::vector<ExpectedValue> expected;
};

/// Fixed list of reference models, in a stable order.
const std::vector<GalleryEntry>& gallery();
/// Throws PreconditionError for an unknown name.
const GalleryEntry& gallery_entry(std::string_view name);

/// Basis u, w, v with q(u,v) = 1, q(w,w) = −1 and ω = u + v.
RatMatrix fujiki_lattice();
/// u ↦ u, w ↦ w + u, v ↦ v + w + u/2 on column coordinates.
RatMatrix fujiki_parabolic();
/// diag(1, −1, 1)
RatMatrix fujiki_finite();

struct FuzzCase {
  RatMatrix a;                 // T·U·T⁻¹ on H^{1,0}
  std::vector<int> partition;  // Jordan block sizes of U, descending
  int expected_plov = 0;       // Σ kᵢ²
};

/// Random partition of d, U the upper-triangular unipotent Jordan matrix for it, and T a bounded
/// product of integer elementary matrices.
FuzzCase random_torus_case(int d, std::mt19937_64& rng);

}  // namespace plovlab
