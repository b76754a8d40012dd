#include "superlie/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace superlie::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad("expected a non-negative integer");
  return j.get<std::size_t>();
}

// Entries are taken literally; [x_j, x_i] is filled in as −[x_i, x_j]
// only when the input never mentions (j, i). That keeps a
// non-antisymmetric table visible to validation.
LieAlgebra algebra_from_json(std::size_t k, const json& br) {
  if (!br.is_array()) bad("brackets must be a list");
  std::vector<Vector> raw(k * k, zero_vector(k));
  std::vector<bool> given(k * k, false);
  for (const auto& b : br) {
    if (!b.is_array() || b.size() != 4) bad("bracket entry must be [i, j, l, coeff]");
    const std::size_t i = index_from_json(b[0]), j = index_from_json(b[1]), l = index_from_json(b[2]);
    if (i >= k || j >= k || l >= k)
      throw Error(ErrorCode::InvalidInput, "bracket index out of range", {i, j, l});
    raw[i * k + j][l] += scalar_from_json(b[3]);
    given[i * k + j] = true;
  }
  LieAlgebra g(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (given[i * k + j]) g.set_bracket(i, j, raw[i * k + j]);
      else if (given[j * k + i]) g.set_bracket(i, j, Scalar(-1) * raw[j * k + i]);
    }
  return g;
}

}  // namespace

json to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("expected a rational as \"p/q\" or an integer");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorCode::DimensionMismatch, "matrix needs " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "matrix row needs " + std::to_string(cols) + " entries", {i});
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

json to_json(const PolyElement& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return out;
}

PolyElement poly_from_json(const json& j, const SpacePtr& space) {
  if (!j.is_array()) bad("polynomial must be a list of terms");
  PolyElement p(space);
  for (const auto& t : j) {
    const json& e = field(t, "exp");
    if (!e.is_array() || e.size() != space->dim()) bad("exponent length must equal dim v");
    Exponent exp;
    for (const auto& x : e) exp.push_back(static_cast<unsigned>(index_from_json(x)));
    p.add_term(exp, scalar_from_json(field(t, "coeff")));
  }
  return p;
}

json space_to_json(const SymplecticSpace& s) {
  return {{"dim", s.dim()}, {"omega", to_json(s.omega())}};
}

SpacePtr space_from_json(const json& j) {
  const std::size_t d = index_from_json(field(j, "dim"));
  const json& om = field(j, "omega");
  if (om.is_string()) {
    if (om.get<std::string>() != "standard") bad("omega must be a matrix or \"standard\"");
    if (d % 2) throw Error(ErrorCode::OddDimension);
    return standard_space(d / 2);
  }
  return std::make_shared<const SymplecticSpace>(matrix_from_json(om, d, d));
}

json g0_to_json(const QuadraticLieAlgebra& g) {
  json br = json::array();
  for (const auto& e : g.algebra.entries()) br.push_back({e.i, e.j, e.l, to_json(e.value)});
  return {{"dim", g.dim()}, {"brackets", br}, {"form", to_json(g.form)}};
}

QuadraticLieAlgebra g0_from_json(const json& j) {
  const std::size_t k = index_from_json(field(j, "dim"));
  return {algebra_from_json(k, field(j, "brackets")), matrix_from_json(field(j, "form"), k, k)};
}

json problem_to_json(const SymplecticRep& rep) {
  json nu = json::array();
  for (const auto& m : rep.matrices) nu.push_back(to_json(m));
  return {{"space", space_to_json(*rep.space)}, {"g0", g0_to_json(rep.algebra)}, {"nu", nu}};
}

SymplecticRep problem_from_json(const json& j) {
  SymplecticRep rep;
  rep.space = space_from_json(field(j, "space"));
  rep.algebra = g0_from_json(field(j, "g0"));
  const json& nu = field(j, "nu");
  if (!nu.is_array()) bad("nu must be a list of matrices");
  const std::size_t n = rep.space->dim();
  for (const auto& m : nu) rep.matrices.push_back(matrix_from_json(m, n, n));
  return rep;
}

void validate_problem(const SymplecticRep& rep) {
  validate(*rep.space);
  validate_lie(rep.algebra);
  validate_rep(rep);
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return out;
}

json odd_brackets_to_json(const SuperAlgebraData& s) {
  json out = json::array();
  for (std::size_t a = 0; a < s.odd_dim; ++a)
    for (std::size_t b = a; b < s.odd_dim; ++b) {
      const Vector& v = s.odd_odd.at(a, b);
      if (is_zero(v)) continue;
      json coeffs = json::array();
      for (const auto& c : v) coeffs.push_back(to_json(c));
      out.push_back({a, b, coeffs});
    }
  return out;
}

json superalgebra_to_json(const SuperAlgebraData& s) {
  json even_odd = json::array();
  for (std::size_t i = 0; i < s.even_dim(); ++i)
    for (std::size_t a = 0; a < s.odd_dim; ++a)
      for (std::size_t b = 0; b < s.odd_dim; ++b)
        if (s.even_odd[i](b, a) != 0) even_odd.push_back({i, a, b, to_json(s.even_odd[i](b, a))});
  json even = json::array();
  for (const auto& e : s.even.entries()) even.push_back({e.i, e.j, e.l, to_json(e.value)});
  return {{"even_dim", s.even_dim()},
          {"odd_dim", s.odd_dim},
          {"even_brackets", even},
          {"even_odd", even_odd},
          {"odd_odd", odd_brackets_to_json(s)},
          {"form_even", to_json(s.form_even)},
          {"form_odd", to_json(s.form_odd)}};
}

SuperAlgebraData superalgebra_from_json(const json& j) {
  SuperAlgebraData s;
  const std::size_t k = index_from_json(field(j, "even_dim"));
  const std::size_t q = index_from_json(field(j, "odd_dim"));
  s.even = algebra_from_json(k, field(j, "even_brackets"));
  s.odd_dim = q;
  s.even_odd.assign(k, Matrix(q, q));
  for (const auto& e : field(j, "even_odd")) {
    if (!e.is_array() || e.size() != 4) bad("even-odd entry must be [i, a, b, coeff]");
    const std::size_t i = index_from_json(e[0]), a = index_from_json(e[1]), b = index_from_json(e[2]);
    if (i >= k || a >= q || b >= q) bad("even-odd index out of range");
    s.even_odd[i](b, a) = scalar_from_json(e[3]);
  }
  s.odd_odd = OddBracketTable(q, k);
  for (const auto& e : field(j, "odd_odd")) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_array() || e[2].size() != k)
      bad("odd-odd entry must be [a, b, [coeffs]]");
    Vector v;
    for (const auto& c : e[2]) v.push_back(scalar_from_json(c));
    s.odd_odd.set(index_from_json(e[0]), index_from_json(e[1]), std::move(v));
  }
  s.form_even = matrix_from_json(field(j, "form_even"), k, k);
  s.form_odd = matrix_from_json(field(j, "form_odd"), q, q);
  return s;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot replace " + path);
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::IoError, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace superlie::io
