#include "plovlab/gallery.hpp"

#include <algorithm>

namespace plovlab {

RatMatrix fujiki_lattice() { return RatMatrix{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}; }

RatMatrix fujiki_parabolic() {
  return RatMatrix{{1, 1, Rational(1, 2)}, {0, 1, 1}, {0, 0, 1}};
}

RatMatrix fujiki_finite() { return RatMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}; }

namespace {

ModelWithAction fujiki_pair(const RatMatrix& f, int half_dim) {
  ClassVec omega(std::vector<Rational>{1, 0, 1});
  return {build_fujiki(fujiki_lattice(), Rational(1), half_dim, omega), AutoAction(f)};
}

std::vector<ExpectedValue> growth_values(long plov, long k, long order_m, const std::string& note) {
  return {{"plov", plov, note}, {"gkdim", plov + 1, "plov + 1"}, {"k", k, note}, {"order_m", order_m, note}};
}

std::vector<GalleryEntry> make_gallery() {
  std::vector<GalleryEntry> g;
  for (int d = 1; d <= 5; ++d) {
    g.push_back({"identity-d" + std::to_string(d), "E^" + std::to_string(d) + " with the identity",
                 [d] { return build_torus(RatMatrix::identity(d)); },
                 growth_values(d, 0, 1, "k = 0 forces plov = d")});
  }
  g.push_back({"rotation-order4", "E^3 with A = [[0,-1,0],[1,0,0],[0,0,1]] (finite order 4)",
               [] { return build_torus(RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}); },
               growth_values(3, 0, 4, "finite order, reduced through F^4 = Id")});
  for (int d = 2; d <= 5; ++d) {
    g.push_back({"torus-jordan-d" + std::to_string(d),
                 "E^" + std::to_string(d) + " with a single unipotent Jordan block on H^{1,0}",
                 [d] { return build_torus(jordan_block(d)); },
                 growth_values(static_cast<long>(d) * d, 2L * d - 2, 1, "single block: plov = d^2, k = 2d - 2")});
  }
  g.push_back({"torus-j21", "E^3 with Jordan blocks (2,1)", [] { return build_torus(jordan_matrix({2, 1})); },
               growth_values(5, 2, 1, "2^2 + 1^2")});
  g.push_back({"torus-j22", "E^4 with Jordan blocks (2,2)", [] { return build_torus(jordan_matrix({2, 2})); },
               growth_values(8, 2, 1, "2^2 + 2^2")});
  g.push_back({"torus-j31", "E^4 with Jordan blocks (3,1)", [] { return build_torus(jordan_matrix({3, 1})); },
               growth_values(10, 4, 1, "3^2 + 1^2")});
  g.push_back({"torus-j211", "E^4 with Jordan blocks (2,1,1)",
               [] { return build_torus(jordan_matrix({2, 1, 1})); }, growth_values(6, 2, 1, "2^2 + 1^2 + 1^2")});
  g.push_back({"product-j2xj2", "product of two E^2 single-block tori on V1 + V2",
               [] {
                 auto [m1, a1] = build_torus(jordan_block(2));
                 auto [m2, a2] = build_torus(jordan_block(2));
                 return build_product(m1, a1, m2, a2);
               },
               {{"plov", 8, "additivity: 4 + 4"}, {"gkdim", 9, "plov + 1"}, {"order_m", 1, "unipotent factors"}}});
  for (int half = 1; half <= 2; ++half) {
    g.push_back({"fujiki-parabolic-d" + std::to_string(half),
                 "hyper-Kähler type model of dimension " + std::to_string(2 * half) + " with a parabolic isometry",
                 [half] { return fujiki_pair(fujiki_parabolic(), half); },
                 growth_values(4L * half, 2, 1, "infinite order isometry: plov = 4d'")});
  }
  for (int half = 1; half <= 2; ++half) {
    g.push_back({"fujiki-finite-d" + std::to_string(half),
                 "hyper-Kähler type model of dimension " + std::to_string(2 * half) + " with diag(1,-1,1)",
                 [half] { return fujiki_pair(fujiki_finite(), half); },
                 growth_values(2L * half, 0, 2, "finite order isometry: plov = 2d'")});
  }
  return g;
}

RatMatrix elementary(int d, int i, int j, long c) {
  RatMatrix e = RatMatrix::identity(d);
  e(i, j) = Rational(c);
  return e;
}

}  // namespace

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = make_gallery();
  return entries;
}

const GalleryEntry& gallery_entry(std::string_view name) {
  for (const auto& e : gallery()) {
    if (e.name == name) return e;
  }
  throw PreconditionError("unknown gallery entry \"" + std::string(name) + "\"");
}

FuzzCase random_torus_case(int d, std::mt19937_64& rng) {
  if (d < 1) throw PreconditionError("dimension must be positive");
  FuzzCase out;
  int left = d;
  while (left > 0) {
    std::uniform_int_distribution<int> part(1, left);
    const int b = part(rng);
    out.partition.push_back(b);
    left -= b;
  }
  std::sort(out.partition.rbegin(), out.partition.rend());
  for (int b : out.partition) out.expected_plov += b * b;

  const RatMatrix u = jordan_matrix(out.partition).transpose();
  RatMatrix t = RatMatrix::identity(d);
  RatMatrix t_inv = RatMatrix::identity(d);
  if (d > 1) {
    std::uniform_int_distribution<int> index(0, d - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    const int steps = 2 * d;
    for (int s = 0; s < steps; ++s) {
      const int i = index(rng);
      int j = index(rng);
      while (j == i) j = index(rng);
      const long c = sign(rng) ? 1 : -1;
      t = t * elementary(d, i, j, c);
      t_inv = elementary(d, i, j, -c) * t_inv;
    }
  }
  out.a = t * u * t_inv;
  return out;
}

}  // namespace plovlab
