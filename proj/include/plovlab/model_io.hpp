#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "plovlab/model.hpp"

namespace plovlab {

/// Malformed input file. The message names the source, the JSON path and the offending key.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model read from disk. Torus shorthand files also carry the induced action.
struct LoadedModel {
  IntersectionModel model;
  std::optional<AutoAction> action;
};

/// Accepts the explicit tensor format and the "torus" / "fujiki" shorthands.
/// Explicit files produce synthetic models; shorthands produce geometric ones.
LoadedModel parse_model(const nlohmann::json& j, const std::string& source);
LoadedModel load_model(const std::filesystem::path& path);

/// {"matrix": [["p/q", …], …]}; rows of the file are rows of F, which acts on column coordinates.
RatMatrix parse_matrix_file(const nlohmann::json& j, const std::string& source);
RatMatrix load_matrix(const std::filesystem::path& path);

/// Inline integer matrix "[[1,0],[1,1]]", or a path to a file holding one (bare or as {"h10_matrix": …}).
RatMatrix parse_h10_argument(const std::string& text);

/// Reads a whole file or throws ParseError naming it.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace plovlab
