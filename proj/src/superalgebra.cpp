#include "superlie/superalgebra.hpp"

#include <array>
#include <optional>

#include "superlie/errors.hpp"

namespace superlie {

OddBracketTable::OddBracketTable(std::size_t odd_dim, std::size_t even_dim)
    : odd_dim_(odd_dim),
      even_dim_(even_dim),
      cells_(odd_dim * (odd_dim + 1) / 2, zero_vector(even_dim)) {}

std::size_t OddBracketTable::index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  if (b >= odd_dim_) throw Error(ErrorCode::InvalidInput, "odd index out of range", {a, b});
  return a * (2 * odd_dim_ - a + 1) / 2 + (b - a);
}

void OddBracketTable::set(std::size_t a, std::size_t b, Vector v) {
  if (v.size() != even_dim_) throw Error(ErrorCode::DimensionMismatch, "odd bracket vector");
  cells_[index(a, b)] = std::move(v);
}

SuperTable::SuperTable(const SuperAlgebraData& s)
    : even_dim_(s.even_dim()), dim_(s.dim()), sparse_(dim_ * dim_), gram_(dim_, dim_) {
  const std::size_t k = even_dim_;
  const std::size_t q = s.odd_dim;
  if (s.even_odd.size() != k || s.odd_odd.odd_dim() != q || s.odd_odd.even_dim() != k ||
      s.form_even.rows() != k || s.form_even.cols() != k || s.form_odd.rows() != q ||
      s.form_odd.cols() != q)
    throw Error(ErrorCode::DimensionMismatch, "superalgebra tables");
  for (const auto& m : s.even_odd)
    if (m.rows() != q || m.cols() != q)
      throw Error(ErrorCode::DimensionMismatch, "even-odd action matrix");

  auto push = [&](std::size_t i, std::size_t j, std::size_t target, const Scalar& v) {
    if (v != 0) sparse_[i * dim_ + j].emplace_back(target, v);
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) push(i, j, l, s.even.bracket(i, j)[l]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        const Scalar& v = s.even_odd[i](b, a);
        push(i, k + a, k + b, v);
        push(k + a, i, k + b, -v);
      }
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t l = 0; l < k; ++l) push(k + a, k + b, l, s.odd_odd.at(a, b)[l]);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram_(i, j) = s.form_even(i, j);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) gram_(k + a, k + b) = s.form_odd(a, b);
}

Vector SuperTable::bracket(std::size_t i, std::size_t j) const {
  Vector out = zero_vector(dim_);
  for (const auto& [t, v] : bracket_sparse(i, j)) out[t] = v;
  return out;
}

Vector SuperTable::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      for (const auto& [t, v] : bracket_sparse(i, j)) out[t] += x[i] * y[j] * v;
    }
  }
  return out;
}

SuperAlgebraData assemble_superalgebra(std::size_t even_dim, std::size_t odd_dim,
                                       const std::vector<Vector>& brackets,
                                       const Matrix& gram) {
  const std::size_t k = even_dim;
  const std::size_t n = even_dim + odd_dim;
  if (brackets.size() != n * n || gram.rows() != n || gram.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "assemble superalgebra");
  auto odd = [&](std::size_t i) { return i >= k; };
  SuperAlgebraData s;
  s.even = LieAlgebra(k);
  s.odd_dim = odd_dim;
  s.even_odd.assign(k, Matrix(odd_dim, odd_dim));
  s.odd_odd = OddBracketTable(odd_dim, k);
  s.form_even = Matrix(k, k);
  s.form_odd = Matrix(odd_dim, odd_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& b = brackets[i * n + j];
      if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket vector");
      const bool target_odd = odd(i) != odd(j);
      for (std::size_t t = 0; t < n; ++t)
        if (b[t] != 0 && odd(t) != target_odd)
          throw Error(ErrorCode::InvalidInput, "bracket breaks the grading", {i, j, t});
      if (odd(i) != odd(j) && gram(i, j) != 0)
        throw Error(ErrorCode::InvalidInput, "form pairs even with odd", {i, j});
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      s.even.set_bracket(i, j, Vector(brackets[i * n + j].begin(), brackets[i * n + j].begin() + k));
      s.form_even(i, j) = gram(i, j);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < odd_dim; ++a)
      for (std::size_t b = 0; b < odd_dim; ++b) s.even_odd[i](b, a) = brackets[i * n + k + a][k + b];
  for (std::size_t a = 0; a < odd_dim; ++a)
    for (std::size_t b = 0; b < odd_dim; ++b) {
      s.form_odd(a, b) = gram(k + a, k + b);
      if (a <= b) {
        const Vector& v = brackets[(k + a) * n + k + b];
        s.odd_odd.set(a, b, Vector(v.begin(), v.begin() + k));
      }
    }
  return s;
}

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + ")";
}

void accumulate(Vector& acc, const Scalar& f, const SuperTable::Sparse& row) {
  for (const auto& [t, v] : row) acc[t] += f * v;
}

}  // namespace

std::vector<CheckResult> verify_superalgebra(const SuperAlgebraData& s) {
  const SuperTable table(s);
  const std::size_t n = table.dim();
  auto sign = [&](std::size_t a, std::size_t b) {
    return table.parity(a) * table.parity(b) == 1 ? -1 : 1;
  };

  std::vector<CheckResult> out;

  std::optional<std::string> anti;
  for (std::size_t a = 0; a < n && !anti; ++a)
    for (std::size_t b = a; b < n && !anti; ++b) {
      // [a,b] = −(−1)^{|a||b|}[b,a]
      Vector lhs = table.bracket(a, b);
      Vector rhs = Scalar(-sign(a, b)) * table.bracket(b, a);
      if (lhs != rhs) anti = tuple_str({a, b});
    }
  out.push_back({"graded_antisymmetry", !anti, anti.value_or("")});

  // [x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]], grouped by odd count.
  static const std::array<const char*, 4> sectors = {
      "jacobi_even_even_even", "jacobi_even_even_odd", "jacobi_even_odd_odd",
      "jacobi_odd_odd_odd"};
  std::array<std::optional<std::string>, 4> jac;
  Vector lhs(n), rhs(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const int sector = table.parity(x) + table.parity(y) + table.parity(z);
        if (jac[sector]) continue;
        for (auto& v : lhs) v = 0;
        for (auto& v : rhs) v = 0;
        for (const auto& [d, c] : table.bracket_sparse(y, z))
          accumulate(lhs, c, table.bracket_sparse(x, d));
        for (const auto& [d, c] : table.bracket_sparse(x, y))
          accumulate(rhs, c, table.bracket_sparse(d, z));
        const Scalar sg = sign(x, y);
        for (const auto& [d, c] : table.bracket_sparse(x, z))
          accumulate(rhs, sg * c, table.bracket_sparse(y, d));
        if (lhs != rhs) jac[sector] = tuple_str({x, y, z});
      }
  for (std::size_t i = 0; i < 4; ++i) out.push_back({sectors[i], !jac[i], jac[i].value_or("")});

  const Matrix& g = table.gram();
  std::optional<std::string> supersym;
  for (std::size_t a = 0; a < n && !supersym; ++a)
    for (std::size_t b = a; b < n && !supersym; ++b) {
      const bool cross = table.parity(a) != table.parity(b);
      if ((cross && (g(a, b) != 0 || g(b, a) != 0)) || (!cross && g(a, b) != sign(a, b) * g(b, a)))
        supersym = tuple_str({a, b});
    }
  out.push_back({"form_supersymmetric", !supersym, supersym.value_or("")});

  // ([x,y],z) = −(−1)^{|x||y|}(y,[x,z])
  std::optional<std::string> inv;
  for (std::size_t x = 0; x < n && !inv; ++x)
    for (std::size_t y = 0; y < n && !inv; ++y)
      for (std::size_t z = 0; z < n && !inv; ++z) {
        Scalar l = 0, r = 0;
        for (const auto& [d, c] : table.bracket_sparse(x, y)) l += c * g(d, z);
        for (const auto& [d, c] : table.bracket_sparse(x, z)) r += g(y, d) * c;
        if (l != -sign(x, y) * r) inv = tuple_str({x, y, z});
      }
  out.push_back({"form_invariant", !inv, inv.value_or("")});

  const bool nonsingular = rank(g) == n;
  out.push_back({"form_nonsingular", nonsingular, nonsingular ? "" : "rank " + std::to_string(rank(g))});
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace superlie
