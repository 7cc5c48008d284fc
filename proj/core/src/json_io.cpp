#include "opmono/json_io.hpp"

#include <fstream>
#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

namespace opmono {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw JsonInputError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& require_array(const json& j, const std::string& where, std::size_t size) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != size) fail(where, "expected " + std::to_string(size) + " elements, got " + std::to_string(j.size()));
  return j;
}

std::size_t require_positive(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) fail(where, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonInputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": malformed JSON: " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonInputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational string such as \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

BMatrix bmatrix_from_json(const json& j, std::size_t dim, const std::string& where) {
  require_array(j, where, dim);
  BMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_where = where + "/" + std::to_string(r);
    require_array(j[r], row_where, dim);
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rational_from_json(j[r][c], row_where + "/" + std::to_string(c));
  }
  return m;
}

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const BMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PolyMatrix& p) {
  // [{"s": e1, "t": e0, "value": matrix}, ...] in exponent order.
  json out = json::array();
  for (const auto& [e, m] : p.terms()) out.push_back({{"t", e[0]}, {"s", e[1]}, {"value", to_json(m)}});
  return out;
}

MatrixModel model_from_json(const json& j) {
  if (!j.is_object()) fail("", "expected a model object");
  for (const auto& [key, value] : j.items()) {
    if (key != "d" && key != "k" && key != "weights" && key != "variables") fail("/" + key, "unknown key");
  }
  for (const char* key : {"d", "k", "weights", "variables"}) {
    if (!j.contains(key)) fail("", std::string("missing key \"") + key + "\"");
  }
  const std::size_t d = require_positive(j["d"], "/d");
  const std::size_t k = require_positive(j["k"], "/k");
  require_array(j["weights"], "/weights", k);
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < k; ++i) weights.push_back(rational_from_json(j["weights"][i], "/weights/" + std::to_string(i)));
  if (!j["variables"].is_object() || j["variables"].empty()) fail("/variables", "expected a nonempty object");
  std::map<std::string, BlockMatrix> vars;
  for (const auto& [name, value] : j["variables"].items()) {
    const std::string where = "/variables/" + name;
    require_array(value, where, k);
    std::vector<BMatrix> blocks;
    for (std::size_t r = 0; r < k; ++r) {
      require_array(value[r], where + "/" + std::to_string(r), k);
      for (std::size_t c = 0; c < k; ++c) {
        blocks.push_back(bmatrix_from_json(value[r][c], d, where + "/" + std::to_string(r) + "/" + std::to_string(c)));
      }
    }
    vars.emplace(name, BlockMatrix(k, d, std::move(blocks)));
  }
  try {
    return MatrixModel(d, k, std::move(weights), std::move(vars));
  } catch (const std::invalid_argument& e) {
    fail("", e.what());
  }
}

MatrixModel read_model_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return model_from_json(j);
  } catch (const JsonInputError& e) {
    throw JsonInputError(path.string() + ": " + e.what());
  }
}

json to_json(const MatrixModel& model) {
  json weights = json::array();
  for (const auto& w : model.weights()) weights.push_back(w.to_string());
  json vars = json::object();
  for (const auto& [name, x] : model.variables()) {
    json rows = json::array();
    for (std::size_t r = 0; r < x.blocks(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < x.blocks(); ++c) row.push_back(to_json(x.block(r, c)));
      rows.push_back(std::move(row));
    }
    vars[name] = std::move(rows);
  }
  return {{"d", model.dim()}, {"k", model.blocks()}, {"weights", weights}, {"variables", vars}};
}

BlockList blocks_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of blocks");
  BlockList blocks;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const std::string bw = where + "/" + std::to_string(b);
    if (!j[b].is_array()) fail(bw, "expected a block (array of positive integers)");
    Block block;
    for (std::size_t e = 0; e < j[b].size(); ++e) {
      const auto& x = j[b][e];
      if (!x.is_number_integer()) fail(bw + "/" + std::to_string(e), "expected an integer");
      block.push_back(x.get<int>());
    }
    try {
      validate_block(block);
    } catch (const std::invalid_argument& e) {
      fail(bw, e.what());
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

json to_json(const BlockList& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

std::string word_key(std::span<const int> indices) {
  std::string key;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (j) key += ' ';
    key += std::to_string(indices[j] + 1);
  }
  return key;
}

json series_to_json(const BSeries& f, std::size_t degree) {
  if (degree > f.degree_cap()) throw std::invalid_argument("series_to_json: degree exceeds the degree cap");
  json entries = json::object();
  for (std::size_t n = 1; n <= degree; ++n) {
    for (const auto& word : index_words(f.components(), n)) {
      json values = json::array();
      for (const auto& tuple : basis_tuples(f.dim(), n)) values.push_back(to_json(f(word, tuple)));
      entries[word_key(word)] = std::move(values);
    }
  }
  return {{"constant", to_json(f.constant())}, {"entries", std::move(entries)}};
}

BSeries series_from_json(const json& j, std::size_t components) {
  if (!j.is_object() || !j.contains("constant") || !j.contains("entries") || j.size() != 2) {
    fail("", "expected an object with exactly the keys \"constant\" and \"entries\"");
  }
  if (components == 0) fail("", "component count must be positive");
  if (!j["constant"].is_array() || j["constant"].empty()) fail("/constant", "expected a square matrix");
  const std::size_t d = j["constant"].size();
  const BMatrix constant = bmatrix_from_json(j["constant"], d, "/constant");
  if (!j["entries"].is_object()) fail("/entries", "expected an object");
  auto tables = std::make_shared<std::map<std::vector<int>, std::vector<BMatrix>>>();
  std::size_t degree = 0;
  for (const auto& [key, values] : j["entries"].items()) {
    const std::string where = "/entries/" + key;
    std::vector<int> word;
    std::istringstream in(key);
    long i = 0;
    while (in >> i) {
      if (i < 1 || static_cast<std::size_t>(i) > components) fail(where, "component index out of range");
      word.push_back(static_cast<int>(i - 1));
    }
    if (!in.eof() || word.empty()) fail(where, "malformed word key");
    std::size_t expected = 1;
    for (std::size_t s = 0; s < word.size(); ++s) expected *= d * d;
    require_array(values, where, expected);
    std::vector<BMatrix> table;
    for (std::size_t t = 0; t < expected; ++t) table.push_back(bmatrix_from_json(values[t], d, where + "/" + std::to_string(t)));
    degree = std::max(degree, word.size());
    tables->emplace(std::move(word), std::move(table));
  }
  for (std::size_t n = 1; n <= degree; ++n) {
    for (const auto& word : index_words(components, n)) {
      if (!tables->count(word)) fail("/entries", "missing word \"" + word_key(word) + "\"");
    }
  }
  // The table lists values on matrix-unit tuples, last slot fastest.
  auto cache = std::make_shared<BasisTensorCache>(d, [tables, d](std::span<const int> idx, std::span<const BMatrix> units) {
    std::size_t offset = 0;
    for (const auto& u : units) {
      std::size_t a = 0;
      while (u.entries()[a].is_zero()) ++a;
      offset = offset * d * d + a;
    }
    return tables->at(std::vector<int>(idx.begin(), idx.end()))[offset];
  });
  return BSeries(components, d, degree, constant,
                 [cache](std::span<const int> idx, std::span<const BMatrix> b) { return cache->evaluate(idx, b); });
}

}  // namespace opmono
