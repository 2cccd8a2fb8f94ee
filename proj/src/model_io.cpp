#include "plovlab/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "plovlab/builders.hpp"

namespace plovlab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& path, const std::string& what) {
  throw ParseError(source + ": " + path + ": " + what);
}

void reject_unknown_keys(const json& j, const std::string& source, const std::string& path,
                         const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(source, path, "expected an object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) fail(source, path + "." + item.key(), "unknown key");
  }
}

const json& require(const json& j, const std::string& source, const std::string& path, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(source, path + "." + key, "missing required key");
  return *it;
}

Rational rational_at(const json& v, const std::string& source, const std::string& path) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const PreconditionError& e) {
      fail(source, path, std::string("bad rational: ") + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(source, path, "expected a rational string \"p/q\"");
}

long integer_at(const json& v, const std::string& source, const std::string& path) {
  if (!v.is_number_integer()) fail(source, path, "expected an integer");
  return v.get<long>();
}

RatMatrix matrix_at(const json& v, const std::string& source, const std::string& path, bool integers_only) {
  if (!v.is_array() || v.empty()) fail(source, path, "expected a nonempty array of rows");
  const auto rows = static_cast<int>(v.size());
  int cols = -1;
  for (int r = 0; r < rows; ++r) {
    const json& row = v[static_cast<std::size_t>(r)];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.empty()) fail(source, rp, "expected a nonempty row");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) fail(source, rp, "row length differs from the first row");
  }
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const json& x = v[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      const std::string ep = path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      m(r, c) = integers_only ? Rational(integer_at(x, source, ep)) : rational_at(x, source, ep);
    }
  }
  return m;
}

ClassVec class_at(const json& v, const std::string& source, const std::string& path) {
  if (!v.is_array()) fail(source, path, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], source, path + "[" + std::to_string(i) + "]"));
  return ClassVec(std::move(out));
}

template <class F>
auto wrap(const std::string& source, const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(source, path, e.what());
  }
}

LoadedModel parse_torus(const json& j, const std::string& source) {
  reject_unknown_keys(j, source, "$", {"type", "h10_matrix"});
  RatMatrix a = matrix_at(require(j, source, "$", "h10_matrix"), source, "$.h10_matrix", true);
  return wrap(source, "$.h10_matrix", [&] {
    auto [model, action] = build_torus(a);
    return LoadedModel{std::move(model), std::move(action)};
  });
}

LoadedModel parse_fujiki(const json& j, const std::string& source) {
  reject_unknown_keys(j, source, "$", {"type", "q", "c", "half_dim", "omega"});
  RatMatrix q = matrix_at(require(j, source, "$", "q"), source, "$.q", false);
  Rational c = rational_at(require(j, source, "$", "c"), source, "$.c");
  long half = integer_at(require(j, source, "$", "half_dim"), source, "$.half_dim");
  ClassVec omega = class_at(require(j, source, "$", "omega"), source, "$.omega");
  return wrap(source, "$", [&] {
    return LoadedModel{build_fujiki(q, c, static_cast<int>(half), omega), std::nullopt};
  });
}

LoadedModel parse_explicit(const json& j, const std::string& source) {
  reject_unknown_keys(j, source, "$", {"type", "complex_dim", "h", "basis", "intersection", "kahler"});
  const long d = integer_at(require(j, source, "$", "complex_dim"), source, "$.complex_dim");
  const long h = integer_at(require(j, source, "$", "h"), source, "$.h");
  if (d < 1) fail(source, "$.complex_dim", "must be positive");
  if (h < 1) fail(source, "$.h", "must be positive");
  const json& basis = require(j, source, "$", "basis");
  if (!basis.is_array() || static_cast<long>(basis.size()) != h) fail(source, "$.basis", "expected h labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) fail(source, "$.basis[" + std::to_string(i) + "]", "expected a string label");
    labels.push_back(basis[i].get<std::string>());
  }
  const json& inter = require(j, source, "$", "intersection");
  if (!inter.is_array()) fail(source, "$.intersection", "expected an array of entries");
  SparseTensorForm form;
  for (std::size_t e = 0; e < inter.size(); ++e) {
    const std::string ep = "$.intersection[" + std::to_string(e) + "]";
    reject_unknown_keys(inter[e], source, ep, {"idx", "val"});
    const json& idx = require(inter[e], source, ep, "idx");
    if (!idx.is_array() || static_cast<long>(idx.size()) != d) fail(source, ep + ".idx", "expected d indices");
    std::vector<int> key;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const long v = integer_at(idx[t], source, ep + ".idx[" + std::to_string(t) + "]");
      if (v < 0 || v >= h) fail(source, ep + ".idx[" + std::to_string(t) + "]", "index out of range [0, h)");
      key.push_back(static_cast<int>(v));
    }
    if (!std::is_sorted(key.begin(), key.end())) fail(source, ep + ".idx", "indices must be sorted");
    if (form.entries.count(key)) fail(source, ep + ".idx", "duplicate entry");
    Rational val = rational_at(require(inter[e], source, ep, "val"), source, ep + ".val");
    if (!val.is_zero()) form.entries.emplace(std::move(key), std::move(val));
  }
  ClassVec omega = class_at(require(j, source, "$", "kahler"), source, "$.kahler");
  if (static_cast<long>(omega.size()) != h) fail(source, "$.kahler", "expected h coordinates");
  return wrap(source, "$", [&] {
    return LoadedModel{IntersectionModel(static_cast<int>(d), std::move(labels), std::move(form), std::move(omega),
                                         ModelKind::synthetic),
                       std::nullopt};
  });
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
}

LoadedModel parse_model(const json& j, const std::string& source) {
  if (!j.is_object()) fail(source, "$", "expected an object");
  auto it = j.find("type");
  if (it == j.end()) return parse_explicit(j, source);
  if (!it->is_string()) fail(source, "$.type", "expected a string");
  const std::string type = it->get<std::string>();
  if (type == "torus") return parse_torus(j, source);
  if (type == "fujiki") return parse_fujiki(j, source);
  if (type == "explicit") return parse_explicit(j, source);
  fail(source, "$.type", "unknown model type \"" + type + "\"");
}

LoadedModel load_model(const std::filesystem::path& path) { return parse_model(read_json_file(path), path.string()); }

RatMatrix parse_matrix_file(const json& j, const std::string& source) {
  reject_unknown_keys(j, source, "$", {"matrix"});
  RatMatrix m = matrix_at(require(j, source, "$", "matrix"), source, "$.matrix", false);
  if (!m.is_square()) fail(source, "$.matrix", "automorphism matrix must be square");
  return m;
}

RatMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix_file(read_json_file(path), path.string()); }

RatMatrix parse_h10_argument(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
  if (!trimmed.empty() && trimmed.front() == '[') {
    json j;
    try {
      j = json::parse(trimmed);
    } catch (const json::parse_error& e) {
      throw ParseError("--h10-matrix: invalid JSON: " + std::string(e.what()));
    }
    return matrix_at(j, "--h10-matrix", "$", true);
  }
  json j = read_json_file(text);
  if (j.is_object()) {
    reject_unknown_keys(j, text, "$", {"type", "h10_matrix"});
    return matrix_at(require(j, text, "$", "h10_matrix"), text, "$.h10_matrix", true);
  }
  return matrix_at(j, text, "$", true);
}

}  // namespace plovlab
