#include "chull/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "chull/error.hpp"
#include "json.hpp"

namespace chull {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Field errors point at the first occurrence of the key, or the start of the file.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // Later lookups of a key start at the anchor's first occurrence.
  void anchor(const std::string& key) const {
    std::size_t at = text_.find("\"" + key + "\"");
    anchor_ = at == std::string_view::npos ? 0 : at;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    std::size_t at = key.empty() ? std::string_view::npos : text_.find("\"" + key + "\"", anchor_);
    if (at == std::string_view::npos && !key.empty()) at = text_.find("\"" + key + "\"");
    Position p = position_of(text_, at == std::string_view::npos ? 0 : at);
    throw ParseError(what, p.line, p.column);
  }

  const json& field(const json& obj, const std::string& key) const {
    if (!obj.is_object() || !obj.contains(key)) fail(key, "missing field \"" + key + "\"");
    return obj.at(key);
  }

  Rational rational(const json& v, const std::string& key) const {
    try {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    } catch (const Error&) {
    }
    fail(key, "field \"" + key + "\" must be a rational written as an integer or a \"p/q\" string");
  }

  std::vector<Rational> rationals(const json& v, const std::string& key, std::size_t size) const {
    if (!v.is_array() || v.size() != size)
      fail(key, "field \"" + key + "\" must be an array of " + std::to_string(size) + " rationals");
    std::vector<Rational> out;
    for (const auto& e : v) out.push_back(rational(e, key));
    return out;
  }

  Polynomial polynomial(const json& v, const std::string& key) const {
    if (!v.is_string()) fail(key, "field \"" + key + "\" must be a polynomial string");
    try {
      return parse_polynomial(binary_ring(), v.get<std::string>());
    } catch (const ParseError& e) {
      fail(key, "field \"" + key + "\": " + e.what());
    }
  }

 private:
  std::string_view text_;
  mutable std::size_t anchor_ = 0;
};

ProjectiveCurve trigonometric(const Reader& r, const json& j) {
  const json& m = r.field(j, "m");
  if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 40)
    r.fail("m", "field \"m\" must be an integer between 1 and 40");
  TrigCurveSpec s;
  s.m = m.get<unsigned>();
  const char* names[3] = {"x", "y", "z"};
  for (int c = 0; c < 3; ++c) {
    const json& coord = r.field(j, names[c]);
    r.anchor(names[c]);
    s.constant[c] = coord.contains("const") ? r.rational(coord.at("const"), "const") : Rational(0);
    s.cos[c] = coord.contains("cos") ? r.rationals(coord.at("cos"), "cos", s.m) : std::vector<Rational>(s.m);
    s.sin[c] = coord.contains("sin") ? r.rationals(coord.at("sin"), "sin", s.m) : std::vector<Rational>(s.m);
  }
  return to_projective(s);
}

ProjectiveCurve binary_forms(const Reader& r, const json& j) {
  std::array<Polynomial, 4> f;
  for (int i = 0; i < 4; ++i) {
    std::string key = "F" + std::to_string(i);
    f[i] = r.polynomial(r.field(j, key), key);
  }
  if (j.contains("d")) {
    const json& d = j.at("d");
    if (!d.is_number_integer()) r.fail("d", "field \"d\" must be an integer");
    for (int i = 0; i < 4; ++i)
      if (!f[i].is_zero() && f[i].total_degree() != d.get<int>())
        r.fail("F" + std::to_string(i), "form F" + std::to_string(i) + " does not have degree " + std::to_string(d.get<int>()));
  }
  return ProjectiveCurve::from_forms(std::move(f));
}

QuadricPencilSpec quadric_pencil(const Reader& r, const json& j) {
  QuadricPencilSpec p;
  for (const char* key : {"Q1", "Q2"}) {
    const json& q = r.field(j, key);
    if (!q.is_array() || q.size() != 4) r.fail(key, std::string("field \"") + key + "\" must be a 4x4 matrix");
    RationalMatrix m;
    for (const auto& row : q) m.push_back(r.rationals(row, key, 4));
    (std::string(key) == "Q1" ? p.q1 : p.q2) = std::move(m);
  }
  p.validate();
  return p;
}

}  // namespace

const ProjectiveCurve& CurveSpec::curve() const {
  if (is_pencil()) throw Error(ErrorCode::InvalidArgument, "spec is a quadric pencil, not a curve");
  return std::get<ProjectiveCurve>(value);
}

const QuadricPencilSpec& CurveSpec::pencil() const {
  if (!is_pencil()) throw Error(ErrorCode::InvalidArgument, "spec is a curve, not a quadric pencil");
  return std::get<QuadricPencilSpec>(value);
}

CurveSpec parse_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    Position p = position_of(json_text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", p.line, p.column);
  }
  Reader r(json_text);
  if (!j.is_object()) r.fail("", "spec must be a JSON object");
  const json& type = r.field(j, "type");
  if (!type.is_string()) r.fail("type", "field \"type\" must be a string");
  std::string t = type.get<std::string>();
  if (t == "trigonometric") return {trigonometric(r, j)};
  if (t == "binary_forms") return {binary_forms(r, j)};
  if (t == "quadric_pencil") return {quadric_pencil(r, j)};
  r.fail("type", "unknown spec type \"" + t + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CurveSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

Polynomial load_polynomial(const RingPtr& ring, const std::string& path) {
  return parse_polynomial(ring, read_file(path));
}

}  // namespace chull
