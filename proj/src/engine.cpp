#include "superlie/engine.hpp"

#include <string>

namespace superlie {

void validate_rep(const SymplecticRep& rep) {
  const std::size_t k = rep.algebra.dim();
  if (!rep.space) throw Error(ErrorCode::InvalidInput, "representation without a space");
  const std::size_t n = rep.space->dim();
  if (rep.matrices.size() != k)
    throw Error(ErrorCode::DimensionMismatch, "need one matrix per basis element of g0");
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix& m = rep.matrices[i];
    if (m.rows() != n || m.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "representation matrix size", {i});
    if (!is_in_sp(*rep.space, m)) throw Error(ErrorCode::NotSymplectic, {}, {i});
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Matrix expect(n, n);
      const Vector& b = rep.algebra.algebra.bracket(i, j);
      for (std::size_t l = 0; l < k; ++l)
        if (b[l] != 0) expect += b[l] * rep.matrices[l];
      if (!(commutator(rep.matrices[i], rep.matrices[j]) == expect))
        throw Error(ErrorCode::NotARepresentation, {}, {i, j});
    }
}

NotSuperLieTypeError::NotSuperLieTypeError(PolyElement obstruction)
    : Error(ErrorCode::NotSuperLieType, "degree-4 part of the Casimir image is nonzero"),
      obstruction_(std::move(obstruction)) {}

namespace {

SymplecticRep checked(SymplecticRep rep) {
  validate_rep(rep);
  return rep;
}

Matrix invert_form(const Matrix& form) {
  try {
    return invert(form);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) throw Error(ErrorCode::FormSingular);
    throw;
  }
}

// The m = 1 space stands in when v = 0; the constant does not depend on
// the dimension.
Scalar fitted_constant(const QuadraticBasis& basis) {
  if (basis.space()->dim() >= 2) return basis.trace_ratio();
  return trace_ratio_constant(standard_space(1));
}

}  // namespace

LiftedRep::LiftedRep(SymplecticRep rep)
    : rep_(checked(std::move(rep))),
      basis_(rep_.space),
      form_inverse_(invert_form(rep_.algebra.form)) {
  for (std::size_t i = 0; i < even_dim(); ++i) {
    lifts_.push_back(basis_.a_inverse(SpElement(rep_.space, rep_.matrices[i])));
    lift_coords_.push_back(basis_.coords(lifts_.back()));
  }
}

QuadraticElement LiftedRep::nu_star(const Vector& x) const {
  if (x.size() != even_dim()) throw Error(ErrorCode::DimensionMismatch, "g0 coordinates");
  Vector c = zero_vector(basis_.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) c = c + x[i] * lift_coords_[i];
  return basis_.from_coords(c);
}

Vector LiftedRep::nu_star_transpose(const QuadraticElement& w) const {
  if (!(*w.space() == *space())) throw Error(ErrorCode::SpaceMismatch);
  // r_i = (ν_*(x_i), w) via the Gram matrix on S²
  const Vector wc = basis_.coords(w);
  const Vector gw = basis_.gram() * wc;
  Vector r(even_dim());
  for (std::size_t i = 0; i < even_dim(); ++i) {
    Scalar s = 0;
    for (std::size_t p = 0; p < wc.size(); ++p) s += lift_coords_[i][p] * gw[p];
    r[i] = s;
  }
  return form_inverse_ * r;
}

PolyElement LiftedRep::casimir_polynomial() const {
  PolyElement out(space());
  for (std::size_t i = 0; i < even_dim(); ++i) {
    if (lifts_[i].poly().is_zero()) continue;
    const QuadraticElement dual = nu_star(form_inverse_.col(i));
    out += weyl_product(lifts_[i].poly(), dual.poly());
  }
  return out;
}

GradedDecomposition LiftedRep::casimir_image() const {
  GradedDecomposition g = grade(casimir_polynomial());
  for (const auto& [d, p] : g)
    if (d != 0 && d != 4) throw Error(ErrorCode::InternalDegreeLeak, {}, {d});
  return g;
}

TestReport LiftedRep::decide() const {
  const GradedDecomposition g = casimir_image();
  TestReport r{false, std::nullopt, PolyElement(space()), {}};
  if (auto it = g.find(4); it != g.end()) r.obstruction = it->second;
  r.verdict = r.obstruction.is_zero();
  if (r.verdict) {
    auto it = g.find(0);
    r.casimir_scalar = it == g.end() ? Scalar(0) : chi(it->second);
  }

  std::string degrees;
  for (const auto& [d, p] : g) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
  r.diagnostics.push_back({"degree_confinement", true, "degrees={" + degrees + "}"});

  const Scalar c = fitted_constant(basis_);
  r.diagnostics.push_back({"trace_ratio", abs(c) == Scalar(1, 8),
                           "fitted=" + to_string(c) + " printed=1/8"});

  if (r.verdict) {
    const Scalar rhs = c * [&] {
      Scalar t = 0;
      for (std::size_t i = 0; i < even_dim(); ++i) {
        Matrix dual(space()->dim(), space()->dim());
        for (std::size_t j = 0; j < even_dim(); ++j)
          if (form_inverse_(j, i) != 0) dual += form_inverse_(j, i) * rep_.matrices[j];
        t += trace_of_product(rep_.matrices[i], dual);
      }
      return t;
    }();
    r.diagnostics.push_back({"trace_identity", rhs == *r.casimir_scalar,
                             "lhs=" + to_string(*r.casimir_scalar) + " rhs=" + to_string(rhs)});
  }
  return r;
}

TraceIdentity LiftedRep::trace_identity_check() const {
  const TestReport r = decide();
  if (!r.verdict) throw NotSuperLieTypeError(r.obstruction);
  TraceIdentity out{*r.casimir_scalar, 0, fitted_constant(basis_)};
  Scalar t = 0;
  for (std::size_t i = 0; i < even_dim(); ++i)
    for (std::size_t j = 0; j < even_dim(); ++j)
      if (form_inverse_(j, i) != 0)
        t += form_inverse_(j, i) * trace_of_product(rep_.matrices[i], rep_.matrices[j]);
  out.rhs = out.constant_used * t;
  if (out.lhs != out.rhs)
    throw Error(ErrorCode::IdentityViolated,
                "casimir scalar " + to_string(out.lhs) + " vs " + to_string(out.rhs));
  return out;
}

SuperAlgebraData LiftedRep::construct_unchecked() const {
  const std::size_t k = even_dim();
  const std::size_t n = space()->dim();
  SuperAlgebraData s;
  s.even = rep_.algebra.algebra;
  s.odd_dim = n;
  s.even_odd = rep_.matrices;
  s.odd_odd = OddBracketTable(n, k);
  s.form_even = rep_.algebra.form;
  s.form_odd = space()->omega();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Exponent e(n, 0);
      ++e[a];
      ++e[b];
      // y_a·y_b as an element of S²; x_a² carries coefficient 1 here
      const QuadraticElement w(PolyElement::monomial(space(), e));
      s.odd_odd.set(a, b, Scalar(2) * nu_star_transpose(w));
    }
  return s;
}

SuperAlgebraData LiftedRep::construct() const {
  const TestReport r = decide();
  if (!r.verdict) throw NotSuperLieTypeError(r.obstruction);
  return construct_unchecked();
}

QuadraticElement nu_star(const SymplecticRep& rep, std::size_t i) {
  if (i >= rep.algebra.dim()) throw Error(ErrorCode::InvalidInput, "basis index", {i});
  return a_inverse(SpElement(rep.space, rep.matrices.at(i)));
}

Vector nu_star_transpose(const SymplecticRep& rep, const QuadraticElement& w) {
  return LiftedRep(rep).nu_star_transpose(w);
}

GradedDecomposition casimir_image(const SymplecticRep& rep) {
  return LiftedRep(rep).casimir_image();
}

TestReport decide(const SymplecticRep& rep) { return LiftedRep(rep).decide(); }

SuperAlgebraData construct_superalgebra(const SymplecticRep& rep) {
  return LiftedRep(rep).construct();
}

SuperAlgebraData construct_superalgebra_unchecked(const SymplecticRep& rep) {
  return LiftedRep(rep).construct_unchecked();
}

TraceIdentity trace_identity_check(const SymplecticRep& rep) {
  return LiftedRep(rep).trace_identity_check();
}

Vector jacobiator(const SuperAlgebraData& s, std::size_t a, std::size_t b, std::size_t c) {
  const SuperTable t(s);
  const std::size_t k = s.even_dim();
  if (a >= s.odd_dim || b >= s.odd_dim || c >= s.odd_dim)
    throw Error(ErrorCode::InvalidInput, "odd index out of range", {a, b, c});
  auto unit = [&](std::size_t i) {
    Vector v = zero_vector(t.dim());
    v[k + i] = 1;
    return v;
  };
  const Vector ya = unit(a), yb = unit(b), yc = unit(c);
  const Vector sum = t.bracket(ya, t.bracket(yb, yc)) + t.bracket(yb, t.bracket(yc, ya)) +
                     t.bracket(yc, t.bracket(ya, yb));
  return Vector(sum.begin() + static_cast<std::ptrdiff_t>(k), sum.end());
}

Vector triple_contraction(const PolyElement& p, std::size_t a, std::size_t b, std::size_t c) {
  const SymplecticSpace& v = *p.space();
  if (a >= v.dim() || b >= v.dim() || c >= v.dim())
    throw Error(ErrorCode::InvalidInput, "odd index out of range", {a, b, c});
  const PolyElement r =
      iota(basis_vector(v, c), iota(basis_vector(v, b), iota(basis_vector(v, a), p)));
  return Scalar(2) * component(r, 1).linear_part();
}

SymplecticRep rep_from_superalgebra(const SuperAlgebraData& s) {
  return SymplecticRep{QuadraticLieAlgebra{s.even, s.form_even}, make_space(s.form_odd),
                       s.even_odd};
}

SymplecticRep scale_form(const SymplecticRep& rep, const Scalar& lambda) {
  SymplecticRep out = rep;
  out.algebra.form = lambda * rep.algebra.form;
  return out;
}

}  // namespace superlie
