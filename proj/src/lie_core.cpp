#include "superlie/lie_core.hpp"

#include <tuple>

#include "superlie/errors.hpp"

namespace superlie {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), table_(dim * dim, zero_vector(dim)) {}

LieAlgebra LieAlgebra::from_entries(std::size_t dim, const std::vector<BracketEntry>& entries) {
  LieAlgebra g(dim);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.l >= dim)
      throw Error(ErrorCode::InvalidInput, "bracket index out of range", {e.i, e.j, e.l});
    if (e.i == e.j) throw Error(ErrorCode::NotAntisymmetric, "[x,x] entry", {e.i, e.j});
    g.table_[e.i * dim + e.j][e.l] += e.value;
    g.table_[e.j * dim + e.i][e.l] -= e.value;
  }
  return g;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Vector& b = bracket(i, j);
      for (std::size_t l = 0; l < dim_; ++l)
        if (b[l] != 0) out[l] += x[i] * y[j] * b[l];
    }
  }
  return out;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vector v) {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket vector");
  table_.at(i * dim_ + j) = std::move(v);
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t l = 0; l < dim_; ++l)
        if (bracket(i, j)[l] != 0) out.push_back({i, j, l, bracket(i, j)[l]});
  return out;
}

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

}  // namespace

void validate_bracket(const LieAlgebra& g) {
  const std::size_t k = g.dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (g.bracket(i, j) != Scalar(-1) * g.bracket(j, i))
        throw Error(ErrorCode::NotAntisymmetric, {}, {i, j});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        const Vector xi = unit(k, i), xj = unit(k, j), xl = unit(k, l);
        const Vector sum = g.bracket(xi, g.bracket(j, l)) + g.bracket(xj, g.bracket(l, i)) +
                           g.bracket(xl, g.bracket(i, j));
        if (!is_zero(sum)) throw Error(ErrorCode::JacobiFails, {}, {i, j, l});
      }
}

void validate_lie(const QuadraticLieAlgebra& g) {
  const std::size_t k = g.dim();
  if (g.form.rows() != k || g.form.cols() != k)
    throw Error(ErrorCode::DimensionMismatch, "form size does not match algebra");
  validate_bracket(g.algebra);
  if (rank(g.form) != k) throw Error(ErrorCode::FormSingular);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.form(i, j) != g.form(j, i))
        throw Error(ErrorCode::InvalidInput, "form not symmetric", {i, j});
  // ([x_i, x_j], x_l) + (x_j, [x_i, x_l]) = 0
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = j; l < k; ++l) {
        Scalar s = 0;
        const Vector& bij = g.algebra.bracket(i, j);
        const Vector& bil = g.algebra.bracket(i, l);
        for (std::size_t t = 0; t < k; ++t) s += bij[t] * g.form(t, l) + g.form(j, t) * bil[t];
        if (s != 0) throw Error(ErrorCode::FormNotInvariant, {}, {i, j, l});
      }
}

CasimirPairs casimir_pairs(const QuadraticLieAlgebra& g) {
  Matrix inv;
  try {
    inv = invert(g.form);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) throw Error(ErrorCode::FormSingular);
    throw;
  }
  CasimirPairs out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.duals.push_back(inv.col(i));
  return out;
}

Vector coordinates_in_span(const std::vector<Matrix>& basis, const Matrix& m) {
  const std::size_t k = basis.size();
  const std::size_t cells = m.rows() * m.cols();
  Matrix aug(cells, k + 1);
  for (std::size_t b = 0; b < k; ++b) {
    if (basis[b].rows() != m.rows() || basis[b].cols() != m.cols())
      throw Error(ErrorCode::DimensionMismatch, "span basis shape");
    for (std::size_t c = 0; c < cells; ++c) aug(c, b) = basis[b](c / m.cols(), c % m.cols());
  }
  for (std::size_t c = 0; c < cells; ++c) aug(c, k) = m(c / m.cols(), c % m.cols());
  const auto pivots = row_reduce(aug);
  if (pivots.size() != k || (k > 0 && pivots.back() != k - 1))
    throw Error(ErrorCode::InvalidInput, "matrix not in span of an independent basis");
  Vector coords(k);
  for (std::size_t b = 0; b < k; ++b) coords[b] = aug(b, k);
  return coords;
}

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis) {
  const std::size_t k = basis.size();
  LieAlgebra g(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      g.set_bracket(i, j, coordinates_in_span(basis, commutator(basis[i], basis[j])));
  return g;
}

}  // namespace superlie
