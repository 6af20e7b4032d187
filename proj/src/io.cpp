#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "leibniz/gradations.hpp"
#include "leibniz/isomorphism.hpp"

namespace leibniz {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

FormatError::FormatError(const std::string& source, int line, const std::string& token, const std::string& why)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + why + (token.empty() ? "" : " (token '" + token + "')")),
      source_(source),
      line_(line),
      token_(token) {}

namespace {

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  for (std::size_t i = 0; i < offset; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Inputs are parsed into a DOM without positions, so semantic errors are
// located by the first occurrence of the offending token.
struct Context {
  std::string_view text;
  std::string source;

  [[noreturn]] void fail(const std::string& token, const std::string& why) const {
    std::size_t at = text.find("\"" + token + "\"");
    if (at == std::string_view::npos) at = text.find(token);
    const int line = at == std::string_view::npos ? 0 : line_of_offset(text, at);
    throw FormatError(source, line, token, why);
  }
};

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const std::string token = byte < text.size() ? std::string(1, text[byte]) : std::string("<eof>");
    throw FormatError(source, line_of_offset(text, byte), token, "invalid JSON");
  }
}

Scalar scalar_from_json(const json& j, const Context& ctx) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) ctx.fail(j.dump(), "coefficient must be a string in the scalar grammar");
  const auto s = j.get<std::string>();
  try {
    return Scalar::parse(s);
  } catch (const ParseError& e) {
    ctx.fail(s, e.what());
  }
}

std::string label_from_json(const json& j, const Context& ctx, const char* what) {
  if (!j.is_string()) ctx.fail(j.dump(), std::string(what) + " must be a basis label string");
  return j.get<std::string>();
}

Algebra algebra_from_json(const json& j, const Context& ctx) {
  if (!j.is_object()) ctx.fail("{", "algebra must be a JSON object");
  if (!j.contains("basis") || !j["basis"].is_array()) ctx.fail("basis", "missing 'basis' array");

  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& l : j["basis"]) {
    auto s = label_from_json(l, ctx, "basis entry");
    if (s.empty()) ctx.fail(s, "empty basis label");
    if (!seen.insert(s).second) ctx.fail(s, "duplicate basis label");
    labels.push_back(std::move(s));
  }
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) ctx.fail("dim", "'dim' must be an integer");
    if (j["dim"].get<long>() != static_cast<long>(labels.size()))
      ctx.fail("dim", "'dim' disagrees with the length of 'basis'");
  }

  Algebra a(labels);
  auto lookup = [&](const std::string& label) {
    auto idx = a.index_of(label);
    if (!idx) ctx.fail(label, "unknown basis label");
    return *idx;
  };

  if (j.contains("products")) {
    if (!j["products"].is_array()) ctx.fail("products", "'products' must be an array");
    for (const auto& p : j["products"]) {
      if (!p.is_object() || !p.contains("left") || !p.contains("right") || !p.contains("result"))
        ctx.fail("products", "each product needs 'left', 'right' and 'result'");
      const Index l = lookup(label_from_json(p["left"], ctx, "left"));
      const Index r = lookup(label_from_json(p["right"], ctx, "right"));
      if (!p["result"].is_array()) ctx.fail("result", "'result' must be an array of [label, coefficient]");
      Vector v = a.product(l, r);
      for (const auto& term : p["result"]) {
        if (!term.is_array() || term.size() != 2) ctx.fail("result", "result term must be [label, coefficient]");
        v(lookup(label_from_json(term[0], ctx, "result label"))) += scalar_from_json(term[1], ctx);
      }
      a.set_product(l, r, v);
    }
  }
  return a;
}

ordered_json algebra_to_ordered(const Algebra& a) {
  ordered_json out;
  out["dim"] = a.dim();
  out["basis"] = a.labels();
  ordered_json products = ordered_json::array();
  for (const auto& [key, result] : a.products()) {
    ordered_json terms = ordered_json::array();
    for (Index k = 0; k < a.dim(); ++k)
      if (!result(k).is_zero()) terms.push_back({a.label(k), result(k).to_string()});
    ordered_json p;
    p["left"] = a.label(key.first);
    p["right"] = a.label(key.second);
    p["result"] = std::move(terms);
    products.push_back(std::move(p));
  }
  out["products"] = std::move(products);
  return out;
}

Matrix matrix_from_json(const json& j, const Context& ctx) {
  const json& rows = j.is_object() && j.contains("map") ? j["map"] : j;
  if (!rows.is_array()) ctx.fail("map", "map must be an array of rows");
  const Index n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) ctx.fail("map", "map must be square");
    for (Index c = 0; c < n; ++c) m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)], ctx);
  }
  return m;
}

ordered_json matrix_to_ordered(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path, 0, path, "cannot write file");
  out << text;
}

Algebra parse_algebra(std::string_view text, const std::string& source) {
  return algebra_from_json(parse_json(text, source), Context{text, source});
}

Algebra load_algebra(const std::string& path) { return parse_algebra(read_text_file(path), path); }

std::string algebra_to_json(const Algebra& a) { return algebra_to_ordered(a).dump(2) + "\n"; }

WeightAssignment parse_weights(std::string_view text, const Algebra& a, const std::string& source) {
  const Context ctx{text, source};
  const json j = parse_json(text, source);
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_object())
    ctx.fail("weights", "expected {\"weights\": {label: integer, ...}}");
  WeightAssignment w;
  w.weights.assign(static_cast<std::size_t>(a.dim()), 0);
  std::vector<bool> set(static_cast<std::size_t>(a.dim()), false);
  for (const auto& [label, value] : j["weights"].items()) {
    auto idx = a.index_of(label);
    if (!idx) ctx.fail(label, "unknown basis label");
    if (!value.is_number_integer()) ctx.fail(label, "weight must be an integer");
    w.weights[static_cast<std::size_t>(*idx)] = value.get<int>();
    set[static_cast<std::size_t>(*idx)] = true;
  }
  for (Index i = 0; i < a.dim(); ++i)
    if (!set[static_cast<std::size_t>(i)]) ctx.fail("weights", "no weight for basis vector " + a.label(i));
  return w;
}

WeightAssignment load_weights(const std::string& path, const Algebra& a) {
  return parse_weights(read_text_file(path), a, path);
}

std::string weights_to_json(const Algebra& a, const WeightAssignment& w) {
  ordered_json weights = ordered_json::object();
  for (Index i = 0; i < a.dim(); ++i) weights[a.label(i)] = w.weights.at(static_cast<std::size_t>(i));
  ordered_json out;
  out["weights"] = std::move(weights);
  return out.dump(2) + "\n";
}

Matrix parse_matrix(std::string_view text, const std::string& source) {
  return matrix_from_json(parse_json(text, source), Context{text, source});
}

std::string matrix_to_json(const Matrix& m) { return matrix_to_ordered(m).dump() + "\n"; }

IsoCertificate parse_certificate(std::string_view text, const std::string& source) {
  const Context ctx{text, source};
  const json j = parse_json(text, source);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map"))
    ctx.fail("source", "certificate needs 'source', 'target' and 'map'");
  IsoCertificate c{algebra_from_json(j["source"], ctx), algebra_from_json(j["target"], ctx),
                   matrix_from_json(j["map"], ctx)};
  if (c.source.dim() != c.target.dim() || c.map.rows() != c.source.dim())
    ctx.fail("map", "dimensions of source, target and map disagree");
  return c;
}

IsoCertificate load_certificate(const std::string& path) { return parse_certificate(read_text_file(path), path); }

std::string certificate_to_json(const IsoCertificate& c) {
  ordered_json out;
  out["source"] = algebra_to_ordered(c.source);
  out["target"] = algebra_to_ordered(c.target);
  out["map"] = matrix_to_ordered(c.map);
  return out.dump(2) + "\n";
}

}  // namespace leibniz
