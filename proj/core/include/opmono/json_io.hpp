#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "opmono/bmatrix.hpp"
#include "opmono/matrix_model.hpp"
#include "opmono/partitions.hpp"
#include "opmono/series.hpp"

namespace opmono {

/// Malformed or invalid JSON input. The message names the location: a line
/// and column for syntax errors, a JSON pointer for schema errors.
class JsonInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses text, reporting syntax errors as "<source>:<line>:<column>: ...".
nlohmann::json parse_json(std::string_view text, const std::string& source = "<input>");
nlohmann::json read_json_file(const std::filesystem::path& path);

Rational rational_from_json(const nlohmann::json& j, const std::string& where);
BMatrix bmatrix_from_json(const nlohmann::json& j, std::size_t dim, const std::string& where);
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const BMatrix& m);
nlohmann::json to_json(const PolyMatrix& p);

/// {"d", "k", "weights", "variables"}; unknown keys are rejected.
MatrixModel model_from_json(const nlohmann::json& j);
MatrixModel read_model_file(const std::filesystem::path& path);
nlohmann::json to_json(const MatrixModel& model);

/// A list of blocks such as [[1,3,4],[5,7],[2,6]] (1-based positions).
BlockList blocks_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json to_json(const BlockList& blocks);

/// {"constant": matrix, "entries": {"1 2": [values on matrix-unit tuples in
/// row-major basis order], ...}} for words up to `degree`; indices are
/// 1-based in the keys.
nlohmann::json series_to_json(const BSeries& f, std::size_t degree);

/// Inverse of series_to_json: entries are rebuilt by multilinear extension
/// of the stored tables. The component count is `components`; the dimension
/// and degree cap are read from the document. Throws JsonInputError on a
/// malformed document.
BSeries series_from_json(const nlohmann::json& j, std::size_t components);

/// Word key "1 2 2" for 0-based indices {0, 1, 1}.
std::string word_key(std::span<const int> indices);

}  // namespace opmono
