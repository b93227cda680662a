#ifndef CHEVKIT_IO_HPP
#define CHEVKIT_IO_HPP

// JSON and text serialization: field specs, elements, matrices and the
// decomposition record written by the command-line tool.

#include "chevkit/gauss.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

using json = nlohmann::json;

/// A field chosen on the command line or in a file: GF(p^m) or Q.
struct FieldSpec {
  bool rational = false;
  uint32_t p = 0;
  uint32_t m = 1;
  std::vector<uint32_t> modulus;  // empty: default modulus

  const FiniteField& finite() const {
    if (rational) throw std::invalid_argument("field spec names the rationals");
    return modulus.empty() ? FiniteField::get(p, m) : FiniteField::get(p, m, modulus);
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline uint32_t parse_positive(const std::string& s, const std::string& what) {
  const long long v = parse_int(s);
  if (v <= 0 || v > 0xffffffffLL) throw std::invalid_argument(what + " must be a positive integer");
  return uint32_t(v);
}

}  // namespace detail

/// Parses "p=7", "p=3,m=2", "q=9" or "rational".
inline FieldSpec parse_field_flag(const std::string& text) {
  const std::string s = detail::strip(text);
  if (s == "rational" || s == "Q" || s == "q=0") return FieldSpec{true, 0, 1, {}};
  FieldSpec spec;
  uint64_t q = 0;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("field flag '" + s + "' needs key=value parts");
    const std::string key = detail::strip(part.substr(0, eq));
    const uint32_t val = detail::parse_positive(detail::strip(part.substr(eq + 1)), key);
    if (key == "p") spec.p = val;
    else if (key == "m") spec.m = val;
    else if (key == "q") q = val;
    else throw std::invalid_argument("unknown field flag key '" + key + "'");
  }
  if (q) {
    if (spec.p) throw std::invalid_argument("field flag gives both q and p");
    const FiniteField& f = FiniteField::of_order(q);
    spec.p = f.characteristic();
    spec.m = f.degree();
  }
  if (!spec.p) throw std::invalid_argument("field flag '" + s + "' names no field");
  spec.finite();  // validates p and m
  return spec;
}

inline json field_to_json(const FiniteField& f) {
  if (f.is_prime_field()) return json{{"p", f.characteristic()}, {"m", 1}};
  return json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}
inline json field_to_json(const Rationals&) { return json{{"rational", true}}; }

inline json to_json(const FieldSpec& s) {
  if (s.rational) return json{{"rational", true}};
  return field_to_json(s.finite());
}

inline FieldSpec field_spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("field spec must be a JSON object");
  if (j.value("rational", false)) return FieldSpec{true, 0, 1, {}};
  if (!j.contains("p")) throw std::invalid_argument("field spec needs \"p\" or \"rational\"");
  FieldSpec s;
  s.p = j.at("p").get<uint32_t>();
  s.m = j.value("m", 1u);
  if (j.contains("modulus")) s.modulus = j.at("modulus").get<std::vector<uint32_t>>();
  s.finite();
  return s;
}

inline json element_to_json(const Fq& a) {
  const FiniteField& f = a.context();
  if (f.is_prime_field()) return a.index();
  return f.coeffs(a.index());
}
inline json element_to_json(const Rational& a) { return to_string(a); }

inline Fq element_from_json(const FiniteField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_array()) {
    if (j.size() > f.degree()) throw std::invalid_argument("too many coefficients for " + f.name());
    return f.from_coeffs(j.get<std::vector<long long>>());
  }
  if (j.is_string()) return parse_element(f, j.get<std::string>());
  throw std::invalid_argument("cannot read a " + f.name() + " element from " + j.dump());
}
inline Rational element_from_json(const Rationals& q, const json& j) {
  if (j.is_number_integer()) return q.from_int(j.get<long long>());
  if (j.is_string()) return parse_element(q, j.get<std::string>());
  throw std::invalid_argument("cannot read a rational from " + j.dump());
}

template <class E>
json rows_to_json(const Matrix<E>& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class E>
json matrix_to_json(const Matrix<E>& m) {
  return json{{"field", field_to_json(m.context())}, {"rows", rows_to_json(m)}};
}

template <class Ctx>
Matrix<typename Ctx::element_type> rows_from_json(const Ctx& ctx, const json& rows) {
  using E = typename Ctx::element_type;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("\"rows\" must be a non-empty array");
  const size_t n = rows.size(), c = rows[0].size();
  Matrix<E> m(ctx, n, c);
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw std::invalid_argument("matrix rows have unequal lengths");
    for (size_t j = 0; j < c; ++j) m(i, j) = element_from_json(ctx, rows[i][j]);
  }
  return m;
}

/// Reads {"field": ..., "rows": ...}; the embedded field must match ctx
/// when present.
template <class Ctx>
Matrix<typename Ctx::element_type> matrix_from_json(const Ctx& ctx, const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("matrix JSON needs \"rows\"");
  if (j.contains("field")) {
    const FieldSpec s = field_spec_from_json(j.at("field"));
    if constexpr (std::is_same_v<Ctx, FiniteField>) {
      if (s.rational || &s.finite() != &ctx)
        throw std::invalid_argument("matrix field " + j.at("field").dump() + " differs from " + ctx.name());
    } else {
      if (!s.rational) throw std::invalid_argument("matrix field " + j.at("field").dump() + " is not Q");
    }
  }
  return rows_from_json(ctx, j.at("rows"));
}

/// The field recorded in a matrix file.
inline FieldSpec matrix_field(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw std::invalid_argument("matrix JSON has no \"field\"");
  return field_spec_from_json(j.at("field"));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// Decomposition record, one "key: value" line each:
//
//   kind: gsp 2
//   left: x[1,2](3) w[2]
//   right: x[-1,2](1)
//   diagonal: {"field":...,"rows":[...]}
//   mu: 3
//   lambda: 1
//   alpha: none
template <class E>
std::string format_decomposition(const Decomposition<E>& d) {
  std::string s;
  s += "kind: " + d.kind.token() + " " + std::to_string(d.kind.rank) + "\n";
  s += "left: " + format_word(d.left) + "\n";
  s += "right: " + format_word(d.right) + "\n";
  s += "diagonal: " + matrix_to_json(d.diagonal).dump() + "\n";
  s += "mu: " + to_string(d.mu) + "\n";
  s += "lambda: " + to_string(d.lambda) + "\n";
  s += "alpha: " + (d.alpha ? to_string(*d.alpha) : std::string("none")) + "\n";
  return s;
}

template <class Ctx>
Decomposition<typename Ctx::element_type> parse_decomposition(const Ctx& ctx, const std::string& text) {
  using E = typename Ctx::element_type;
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (detail::strip(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("decomposition line without ':': " + line);
    fields[detail::strip(line.substr(0, colon))] = detail::strip(line.substr(colon + 1));
  }
  for (const char* key : {"kind", "left", "right", "diagonal", "mu", "lambda", "alpha"})
    if (!fields.count(key)) throw std::invalid_argument(std::string("decomposition record lacks '") + key + "'");
  std::stringstream ks(fields["kind"]);
  std::string token;
  size_t rank = 0;
  ks >> token >> rank;
  if (!ks) throw std::invalid_argument("bad kind line '" + fields["kind"] + "'");
  const GroupKind kind = GroupKind::parse(token, rank);
  json diag;
  try {
    diag = json::parse(fields["diagonal"]);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed diagonal JSON: ") + e.what());
  }
  std::optional<E> alpha;
  if (fields["alpha"] != "none") alpha = parse_element(ctx, fields["alpha"]);
  return Decomposition<E>{kind,
                          parse_word(kind, fields["left"], ctx),
                          parse_word(kind, fields["right"], ctx),
                          matrix_from_json(ctx, diag),
                          parse_element(ctx, fields["mu"]),
                          parse_element(ctx, fields["lambda"]),
                          alpha};
}

}  // namespace chevkit

#endif  // CHEVKIT_IO_HPP
