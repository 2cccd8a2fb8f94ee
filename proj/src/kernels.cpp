#include "plovlab/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace plovlab {

void configure_threads_from_env() {
  const char* env = std::getenv("PLOVLAB_THREADS");
  if (env == nullptr) return;
  try {
    int n = std::stoi(env);
    if (n > 0) omp_set_num_threads(n);
  } catch (const std::exception&) {
    // ignored: the variable is only a hint
  }
}

int max_threads() { return omp_get_max_threads(); }

std::vector<std::vector<int>> multisets(int n_items, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || (n_items <= 0 && size > 0)) return out;
  std::vector<int> cur(static_cast<std::size_t>(size), 0);
  while (true) {
    out.push_back(cur);
    int pos = size - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n_items - 1) --pos;
    if (pos < 0) break;
    int v = cur[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < size; ++i) cur[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

mpz_class multinomial_weight(const std::vector<int>& sorted_tuple) {
  mpz_class w = factorial(static_cast<long>(sorted_tuple.size()));
  std::size_t i = 0;
  while (i < sorted_tuple.size()) {
    std::size_t j = i;
    while (j < sorted_tuple.size() && sorted_tuple[j] == sorted_tuple[i]) ++j;
    w /= factorial(static_cast<long>(j - i));
    i = j;
  }
  return w;
}

namespace {

void check_expansion_args(const IntersectionModel& model, std::span<const QPoly> coeffs,
                          std::span<const ClassVec> classes, int power, std::span<const ClassVec> fixed) {
  if (coeffs.size() != classes.size()) throw DimensionError("expansion needs one coefficient per class");
  if (power < 0 || power + static_cast<int>(fixed.size()) != model.complex_dim()) {
    throw DimensionError("expansion power plus fixed classes must equal d");
  }
}

QPoly term_for(const IntersectionModel& model, std::span<const QPoly> coeffs, std::span<const ClassVec> classes,
               const std::vector<int>& active, const std::vector<int>& ms, std::span<const ClassVec> fixed) {
  std::vector<ClassVec> args;
  args.reserve(ms.size() + fixed.size());
  for (int t : ms) args.push_back(classes[static_cast<std::size_t>(active[static_cast<std::size_t>(t)])]);
  args.insert(args.end(), fixed.begin(), fixed.end());
  Rational value = model.eval(args);
  if (value.is_zero()) return {};
  QPoly p = QPoly::constant(value * Rational(multinomial_weight(ms)));
  for (int t : ms) p = p * coeffs[static_cast<std::size_t>(active[static_cast<std::size_t>(t)])];
  return p;
}

}  // namespace

QPoly expand_power(const IntersectionModel& model, std::span<const QPoly> coeffs, std::span<const ClassVec> classes,
                   int power, std::span<const ClassVec> fixed, Exec exec) {
  check_expansion_args(model, coeffs, classes, power, fixed);
  std::vector<int> active;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (!classes[j].is_zero() && !coeffs[j].is_zero()) active.push_back(static_cast<int>(j));
  }
  if (active.empty()) {
    if (power > 0) return {};
    return QPoly::constant(model.eval(fixed));
  }
  const auto tuples = multisets(static_cast<int>(active.size()), power);
  const auto count = static_cast<long>(tuples.size());
  std::vector<QPoly> terms(tuples.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long t = 0; t < count; ++t) {
      terms[static_cast<std::size_t>(t)] = term_for(model, coeffs, classes, active, tuples[static_cast<std::size_t>(t)], fixed);
    }
  } else {
    for (long t = 0; t < count; ++t) {
      terms[static_cast<std::size_t>(t)] = term_for(model, coeffs, classes, active, tuples[static_cast<std::size_t>(t)], fixed);
    }
  }
  QPoly total;
  for (const auto& p : terms) total += p;
  return total;
}

QPoly expand_power_reference(const IntersectionModel& model, std::span<const QPoly> coeffs,
                             std::span<const ClassVec> classes, int power, std::span<const ClassVec> fixed) {
  check_expansion_args(model, coeffs, classes, power, fixed);
  const int m = static_cast<int>(classes.size());
  QPoly total;
  if (m == 0) return power == 0 ? QPoly::constant(model.eval(fixed)) : QPoly{};
  std::vector<int> idx(static_cast<std::size_t>(power), 0);
  while (true) {
    std::vector<ClassVec> args;
    for (int t : idx) args.push_back(classes[static_cast<std::size_t>(t)]);
    args.insert(args.end(), fixed.begin(), fixed.end());
    Rational v = model.eval(args);
    if (!v.is_zero()) {
      QPoly p = QPoly::constant(v);
      for (int t : idx) p = p * coeffs[static_cast<std::size_t>(t)];
      total += p;
    }
    int pos = power - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  return total;
}

std::vector<Rational> self_intersections(const IntersectionModel& model, std::span<const ClassVec> vs, Exec exec) {
  std::vector<Rational> out(vs.size());
  const auto count = static_cast<long>(vs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = model.self_intersection(vs[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = model.self_intersection(vs[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

std::vector<ClassVec> basis_args(const IntersectionModel& model, std::span<const ClassVec> prefix,
                                 const std::vector<int>& gamma) {
  std::vector<ClassVec> args(prefix.begin(), prefix.end());
  for (int g : gamma) args.push_back(model.basis_class(g));
  return args;
}

int complement_size(const IntersectionModel& model, std::span<const ClassVec> prefix) {
  int r = model.complex_dim() - static_cast<int>(prefix.size());
  if (r < 0) throw DimensionError("more classes than the complex dimension");
  return r;
}

// Scans indices [0, count) in blocks and returns the smallest index where pred holds.
template <class Pred>
std::optional<long> first_index(long count, Exec exec, Pred pred) {
  if (exec == Exec::serial) {
    for (long i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const long block = std::max<long>(64, 16L * omp_get_max_threads());
  for (long start = 0; start < count; start += block) {
    const long stop = std::min(count, start + block);
    long best = stop;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (long i = start; i < stop; ++i) {
      if (pred(i)) best = std::min(best, i);
    }
    if (best < stop) return best;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_nonzero_pairing(const IntersectionModel& model, std::span<const ClassVec> prefix,
                                                     Exec exec) {
  const int r = complement_size(model, prefix);
  for (const auto& c : prefix) {
    if (c.is_zero()) return std::nullopt;
  }
  const auto gammas = multisets(model.h(), r);
  auto hit = first_index(static_cast<long>(gammas.size()), exec, [&](long i) {
    return !model.eval(basis_args(model, prefix, gammas[static_cast<std::size_t>(i)])).is_zero();
  });
  if (!hit) return std::nullopt;
  return gammas[static_cast<std::size_t>(*hit)];
}

std::vector<Rational> pairing_vector(const IntersectionModel& model, std::span<const ClassVec> prefix, Exec exec) {
  const int r = complement_size(model, prefix);
  const auto gammas = multisets(model.h(), r);
  std::vector<Rational> out(gammas.size());
  const auto count = static_cast<long>(gammas.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = model.eval(basis_args(model, prefix, gammas[static_cast<std::size_t>(i)]));
    }
  } else {
    for (long i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = model.eval(basis_args(model, prefix, gammas[static_cast<std::size_t>(i)]));
    }
  }
  return out;
}

std::optional<std::vector<int>> find_invariance_failure(const IntersectionModel& model, const RatMatrix& f,
                                                        std::span<const ClassVec> prefix, Exec exec) {
  const int r = complement_size(model, prefix);
  std::vector<ClassVec> image;
  for (const auto& c : prefix) image.push_back(f * c);
  const auto gammas = multisets(model.h(), r);
  auto hit = first_index(static_cast<long>(gammas.size()), exec, [&](long i) {
    const auto& g = gammas[static_cast<std::size_t>(i)];
    return model.eval(basis_args(model, image, g)) != model.eval(basis_args(model, prefix, g));
  });
  if (!hit) return std::nullopt;
  return gammas[static_cast<std::size_t>(*hit)];
}

std::pair<std::optional<std::vector<int>>, long> find_preservation_failure(const IntersectionModel& model,
                                                                           const RatMatrix& f, long cap, Exec exec) {
  if (f.rows() != model.h() || f.cols() != model.h()) throw DimensionError("action matrix does not match the model");
  std::vector<ClassVec> columns;
  for (int i = 0; i < model.h(); ++i) columns.push_back(f * model.basis_class(i));
  const auto all = multisets(model.h(), model.complex_dim());
  const long total = static_cast<long>(all.size());
  const long stride = std::max<long>(1, (total + cap - 1) / std::max<long>(cap, 1));
  const long count = (total + stride - 1) / stride;
  auto hit = first_index(count, exec, [&](long i) {
    const auto& tuple = all[static_cast<std::size_t>(i * stride)];
    std::vector<ClassVec> plain, moved;
    for (int t : tuple) {
      plain.push_back(model.basis_class(t));
      moved.push_back(columns[static_cast<std::size_t>(t)]);
    }
    return model.eval(plain) != model.eval(moved);
  });
  if (!hit) return {std::nullopt, count};
  return {all[static_cast<std::size_t>(*hit * stride)], count};
}

}  // namespace plovlab
