#include "superlie/catalog.hpp"

#include <cctype>
#include <charconv>

namespace superlie {

namespace {

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

std::vector<Matrix> so_basis(std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      out.push_back(unit_matrix(m, i, j) - unit_matrix(m, j, i));
  return out;
}

// [[A, B], [C, −Aᵀ]] with B, C symmetric; n = 1 gives H, E, F.
std::vector<Matrix> sp_std_basis(std::size_t n) {
  const std::size_t d = 2 * n;
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(d, d);
      m(i, j) = 1;
      m(n + j, n + i) = -1;
      out.push_back(std::move(m));
    }
  for (std::size_t off : {n, std::size_t{0}}) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Matrix m(d, d);
        // B block sits top right, C block bottom left
        const std::size_t r = off == n ? 0 : n, c = off == n ? n : 0;
        m(r + i, c + j) = 1;
        m(r + j, c + i) = 1;
        out.push_back(std::move(m));
      }
  }
  return out;
}

Matrix trace_gram(const std::vector<Matrix>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = trace_of_product(basis[i], basis[j]);
  return g;
}

SymplecticRep osp_even_with(std::size_t m, std::size_t n, const Scalar& lambda) {
  const auto so = so_basis(m);
  const auto sp = sp_std_basis(n);
  const Matrix im = Matrix::identity(m), isp = Matrix::identity(2 * n);
  std::vector<Matrix> images;
  for (const auto& x : so) images.push_back(kron(x, isp));
  for (const auto& y : sp) images.push_back(kron(im, y));

  const std::size_t k1 = so.size(), k = so.size() + sp.size();
  Matrix form(k, k);
  const Matrix gso = trace_gram(so), gsp = trace_gram(sp);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) form(i, j) = lambda * gso(i, j);
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < sp.size(); ++j) form(k1 + i, k1 + j) = gsp(i, j);

  auto space = make_space(kron(im, standard_space(n)->omega()));
  return SymplecticRep{QuadraticLieAlgebra{matrix_lie_algebra(images), form}, space, images};
}

void check_osp_size(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidInput, "osp_even needs m, n >= 1");
  if (m * 2 * n > 16) throw Error(ErrorCode::TooLarge, "m*2n must be at most 16", {m, n});
}

}  // namespace

std::optional<Scalar> osp_even_calibration(std::size_t m, std::size_t n) {
  check_osp_size(m, n);
  // The obstruction is O_so/λ + O_sp; two evaluations separate the parts.
  const PolyElement o1 = decide(osp_even_with(m, n, 1)).obstruction;
  if (m < 2) {
    if (!o1.is_zero()) throw Error(ErrorCode::NoCalibration, "sp part alone is obstructed");
    return std::nullopt;
  }
  const PolyElement o2 = decide(osp_even_with(m, n, 2)).obstruction;
  const PolyElement o_so = Scalar(2) * (o1 - o2);
  const PolyElement o_sp = o1 - o_so;
  if (o_so.is_zero()) {
    if (!o_sp.is_zero()) throw Error(ErrorCode::NoCalibration, "so part does not contribute");
    return Scalar(1);
  }
  // μ = 1/λ with μ·O_so + O_sp = 0
  const auto& [e, c] = *o_so.terms().begin();
  const Scalar mu = -o_sp.coeff(e) / c;
  if (mu == 0 || !(mu * o_so + o_sp).is_zero())
    throw Error(ErrorCode::NoCalibration, "no rational ratio zeroes the obstruction");
  return 1 / mu;
}

SymplecticRep build_osp_even(std::size_t m, std::size_t n) {
  const auto lambda = osp_even_calibration(m, n);
  return osp_even_with(m, n, lambda.value_or(Scalar(1)));
}

SymplecticRep build_gl11_even() {
  QuadraticLieAlgebra g{LieAlgebra(2), Matrix{{1, 0}, {0, -1}}};
  return SymplecticRep{g, standard_space(1), {Matrix{{1, 0}, {0, -1}}, Matrix{{-1, 0}, {0, 1}}}};
}

SymplecticRep build_spin_rep(std::size_t two_j) {
  if (two_j % 2 == 0)
    throw Error(ErrorCode::NotSymplectic, "even two_j gives an orthogonal irreducible", {two_j});
  if (two_j > 7) throw Error(ErrorCode::TooLarge, "two_j must be at most 7", {two_j});
  const std::size_t d = two_j + 1;
  Matrix h(d, d), e(d, d), f(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    h(k, k) = Scalar(static_cast<long>(two_j) - 2 * static_cast<long>(k));
    if (k > 0) e(k - 1, k) = Scalar(static_cast<long>(k * (d - k)));
    if (k + 1 < d) f(k + 1, k) = 1;
  }

  // Alternating Ω with XᵀΩ + ΩX = 0 for X = H, E, F: unknowns Ω(p,q).
  const std::size_t u = d * d;
  std::vector<Vector> rows;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Vector r = zero_vector(u);
      r[p * d + q] += 1;
      r[q * d + p] += 1;
      rows.push_back(std::move(r));
    }
  for (const Matrix* x : {&h, &e, &f})
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        // (XᵀΩ)(p,q) = Σ_t X(t,p) Ω(t,q); (ΩX)(p,q) = Σ_t Ω(p,t) X(t,q)
        Vector r = zero_vector(u);
        for (std::size_t t = 0; t < d; ++t) {
          r[t * d + q] += (*x)(t, p);
          r[p * d + t] += (*x)(t, q);
        }
        rows.push_back(std::move(r));
      }
  Matrix sys(rows.size(), u);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < u; ++j) sys(i, j) = rows[i][j];
  const auto ker = kernel_basis(sys);
  if (ker.size() != 1) throw Error(ErrorCode::NotSymplectic, "no unique invariant form");
  Matrix omega(d, d);
  const Scalar norm = ker[0][d - 1];
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) omega(p, q) = ker[0][p * d + q] / norm;

  QuadraticLieAlgebra g{LieAlgebra::from_entries(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}),
                        Matrix{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
  return SymplecticRep{g, make_space(omega), {h, e, f}};
}

SymplecticRep build_abelian(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "abelian needs k >= 1");
  return SymplecticRep{QuadraticLieAlgebra{LieAlgebra(k), Matrix::identity(k)},
                       make_space(Matrix(0, 0)), std::vector<Matrix>(k, Matrix(0, 0))};
}

SymplecticRep build_trivial(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidInput, "trivial needs m >= 1");
  QuadraticLieAlgebra g{LieAlgebra::from_entries(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}),
                        Matrix{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
  return SymplecticRep{g, standard_space(m), std::vector<Matrix>(3, Matrix(2 * m, 2 * m))};
}

DoubleResult build_double(const SuperAlgebraData& s) {
  if (!all_pass(verify_superalgebra(s)))
    throw Error(ErrorCode::InvalidInput, "double needs a verified superalgebra");
  const SuperTable t(s);
  const std::size_t p = s.even_dim(), q = s.odd_dim, n = p + q;
  const std::size_t p2 = 2 * p, q2 = 2 * q, N = p2 + q2;
  // position in the double of element c of s (dual = false) or of e_c*
  auto pos = [&](std::size_t c, bool dual) -> std::size_t {
    if (c < p) return dual ? p + c : c;
    return p2 + (dual ? q : 0) + (c - p);
  };
  auto odd = [&](std::size_t c) { return c >= p; };
  auto sg = [&](std::size_t a, std::size_t c) { return odd(a) && odd(c) ? Scalar(-1) : Scalar(1); };

  std::vector<Vector> br(N * N, zero_vector(N));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [z, v] : t.bracket_sparse(a, b)) br[pos(a, false) * N + pos(b, false)][pos(z, false)] = v;
    }
  // [a, e_c*] = −(−1)^{|a||c|} Σ_z [a,z]_c e_z*
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t z = 0; z < n; ++z)
      for (const auto& [c, v] : t.bracket_sparse(a, z)) {
        const Scalar coef = -sg(a, c) * v;
        br[pos(a, false) * N + pos(c, true)][pos(z, true)] += coef;
        br[pos(c, true) * N + pos(a, false)][pos(z, true)] -= sg(a, c) * coef;
      }

  Matrix gram(N, N);
  for (std::size_t c = 0; c < n; ++c) {
    gram(pos(c, true), pos(c, false)) = 1;
    gram(pos(c, false), pos(c, true)) = odd(c) ? -1 : 1;
  }
  SuperAlgebraData tables = assemble_superalgebra(p2, q2, br, gram);
  SymplecticRep rep = rep_from_superalgebra(tables);
  return DoubleResult{std::move(rep), std::move(tables)};
}

SuperRepresentation adjoint_representation(const SuperAlgebraData& s) {
  const SuperTable t(s);
  SuperRepresentation out{s.even_dim(), s.odd_dim, {}};
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Matrix m(t.dim(), t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (const auto& [l, v] : t.bracket_sparse(i, j)) m(l, j) = v;
    out.images.push_back(std::move(m));
  }
  return out;
}

namespace {

bool invariant_under(const SuperAlgebraData& s, const FormPair& f) {
  SuperAlgebraData c = s;
  c.form_even = f.even;
  c.form_odd = f.odd;
  const auto checks = verify_superalgebra(c);
  return find_check(checks, "form_invariant")->pass && find_check(checks, "form_supersymmetric")->pass;
}

}  // namespace

FormPair supertrace_form(const SuperAlgebraData& s, const SuperRepresentation& pi) {
  const SuperTable t(s);
  const std::size_t n = t.dim(), d = pi.even_dim + pi.odd_dim;
  if (pi.images.size() != n) throw Error(ErrorCode::DimensionMismatch, "one image per basis element");
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& m = pi.images[i];
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "image size", {i});
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const bool off = (r >= pi.even_dim) != (c >= pi.even_dim);
        if (m(r, c) != 0 && off != t.is_odd(i))
          throw Error(ErrorCode::NotARepresentation, "image has the wrong parity", {i});
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Scalar sign = t.is_odd(i) && t.is_odd(j) ? -1 : 1;
      Matrix lhs = pi.images[i] * pi.images[j] - sign * (pi.images[j] * pi.images[i]);
      for (const auto& [l, v] : t.bracket_sparse(i, j)) lhs -= v * pi.images[l];
      if (!lhs.is_zero()) throw Error(ErrorCode::NotARepresentation, {}, {i, j});
    }
  auto str = [&](const Matrix& m) {
    Scalar s0 = 0;
    for (std::size_t r = 0; r < d; ++r) s0 += r < pi.even_dim ? m(r, r) : -m(r, r);
    return s0;
  };
  const std::size_t k = s.even_dim();
  FormPair out{Matrix(k, k), Matrix(s.odd_dim, s.odd_dim)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t.is_odd(i) != t.is_odd(j)) continue;
      const Scalar v = str(pi.images[i] * pi.images[j]);
      if (t.is_odd(i)) out.odd(i - k, j - k) = v;
      else out.even(i, j) = v;
    }
  if (!invariant_under(s, out)) throw Error(ErrorCode::NotInvariant, "supertrace form");
  return out;
}

namespace {

// Complement of span(rad) inside C^n, spanned by unit vectors; returns
// the chosen indices and, for each unit vector e_i, its coordinates on
// [rad..., e_w...].
struct Splitting {
  std::vector<std::size_t> kept;
  Matrix to_quotient;  // kept.size() × n: coordinates mod rad
};

Splitting split(const std::vector<Vector>& rad, std::size_t n) {
  const std::size_t r = rad.size();
  Matrix a(n, r + n);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) a(i, c) = rad[c][i];
  for (std::size_t i = 0; i < n; ++i) a(i, r + i) = 1;
  Matrix reduced = a;
  const auto pivots = row_reduce(reduced);
  Splitting sp;
  for (auto c : pivots)
    if (c >= r) sp.kept.push_back(c - r);
  // basis [rad, e_kept] is invertible; invert to read off coordinates
  Matrix basis(n, n);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c) = rad[c][i];
  for (std::size_t c = 0; c < sp.kept.size(); ++c) basis(sp.kept[c], r + c) = 1;
  const Matrix inv = invert(basis);
  sp.to_quotient = Matrix(sp.kept.size(), n);
  for (std::size_t c = 0; c < sp.kept.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) sp.to_quotient(c, i) = inv(r + c, i);
  return sp;
}

}  // namespace

SuperAlgebraData riemannian_quotient(const SuperAlgebraData& s, const FormPair& form) {
  const std::size_t k = s.even_dim(), q = s.odd_dim;
  if (form.even.rows() != k || form.even.cols() != k || form.odd.rows() != q || form.odd.cols() != q)
    throw Error(ErrorCode::DimensionMismatch, "form blocks");
  if (!invariant_under(s, form)) throw Error(ErrorCode::NotInvariant);

  const auto rad0 = kernel_basis(form.even);
  const auto rad1 = kernel_basis(form.odd);
  const SuperTable t(s);
  const std::size_t n = t.dim();
  // combined-basis radical vectors
  std::vector<Vector> rad;
  for (const auto& v : rad0) {
    Vector w = zero_vector(n);
    for (std::size_t i = 0; i < k; ++i) w[i] = v[i];
    rad.push_back(std::move(w));
  }
  for (const auto& v : rad1) {
    Vector w = zero_vector(n);
    for (std::size_t i = 0; i < q; ++i) w[k + i] = v[i];
    rad.push_back(std::move(w));
  }
  Matrix gram(n, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = form.even(i, j);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) gram(k + i, k + j) = form.odd(i, j);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < rad.size(); ++r) {
      Vector ex = zero_vector(n);
      ex[x] = 1;
      if (!is_zero(gram * t.bracket(ex, rad[r]))) throw Error(ErrorCode::NotAnIdeal, {}, {x, r});
    }

  const Splitting s0 = split(rad0, k), s1 = split(rad1, q);
  const std::size_t k2 = s0.kept.size(), q2 = s1.kept.size(), n2 = k2 + q2;
  std::vector<std::size_t> kept;
  for (auto i : s0.kept) kept.push_back(i);
  for (auto i : s1.kept) kept.push_back(k + i);
  auto project = [&](const Vector& v) {
    Vector even(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    Vector odd(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    Vector out = s0.to_quotient * even;
    const Vector o = s1.to_quotient * odd;
    out.insert(out.end(), o.begin(), o.end());
    return out;
  };
  std::vector<Vector> br;
  Matrix g2(n2, n2);
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      br.push_back(project(t.bracket(kept[a], kept[b])));
      g2(a, b) = gram(kept[a], kept[b]);
    }
  return assemble_superalgebra(k2, q2, br, g2);
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t at = 0;

  [[noreturn]] void fail() const { throw Error(ErrorCode::UnknownInstance, text); }
  void skip() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  }
  bool eat(char c) {
    skip();
    if (at < text.size() && text[at] == c) {
      ++at;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    const std::size_t start = at;
    while (at < text.size() && (std::isalnum(static_cast<unsigned char>(text[at])) || text[at] == '_'))
      ++at;
    if (at == start) fail();
    return text.substr(start, at - start);
  }
  std::size_t number() {
    skip();
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(text.data() + at, text.data() + text.size(), v);
    if (ec != std::errc()) fail();
    at = static_cast<std::size_t>(p - text.data());
    return v;
  }
  InstanceSpec spec() {
    InstanceSpec s;
    s.name = ident();
    if (s.name == "double") {
      if (!eat('(')) fail();
      s.inner = std::make_shared<InstanceSpec>(spec());
      if (!eat(')')) fail();
      return s;
    }
    if (eat('(')) {
      if (!eat(')')) {
        do s.params.push_back(number());
        while (eat(','));
        if (!eat(')')) fail();
      }
    }
    return s;
  }
};

std::size_t arity(const std::string& name) {
  if (name == "osp_even") return 2;
  if (name == "spin" || name == "abelian" || name == "trivial") return 1;
  if (name == "gl11") return 0;
  throw Error(ErrorCode::UnknownInstance, name);
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  Parser p{text};
  InstanceSpec s = p.spec();
  p.skip();
  if (p.at != text.size()) p.fail();
  // check names and arities all the way down
  for (const InstanceSpec* c = &s; c; c = c->inner.get())
    if (c->name != "double" && arity(c->name) != c->params.size())
      throw Error(ErrorCode::UnknownInstance, "wrong number of parameters for " + c->name);
  return s;
}

std::string instance_text(const InstanceSpec& spec) {
  if (spec.inner) return spec.name + "(" + instance_text(*spec.inner) + ")";
  if (spec.params.empty()) return spec.name;
  std::string out = spec.name + "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i)
    out += (i ? "," : "") + std::to_string(spec.params[i]);
  return out + ")";
}

SymplecticRep build_instance(const InstanceSpec& spec) {
  const auto& p = spec.params;
  if (spec.name == "double") {
    if (!spec.inner) throw Error(ErrorCode::UnknownInstance, "double needs an argument");
    return build_double(construct_superalgebra(build_instance(*spec.inner))).rep;
  }
  if (p.size() != arity(spec.name)) throw Error(ErrorCode::UnknownInstance, instance_text(spec));
  if (spec.name == "osp_even") return build_osp_even(p[0], p[1]);
  if (spec.name == "gl11") return build_gl11_even();
  if (spec.name == "spin") return build_spin_rep(p[0]);
  if (spec.name == "abelian") return build_abelian(p[0]);
  return build_trivial(p[0]);
}

SymplecticRep build_instance(const std::string& text) { return build_instance(parse_instance(text)); }

std::vector<InstanceDescriptor> curated_instances() {
  return {
      {"osp_even", {1, 1}, true, frac(-3, 8)},
      {"osp_even", {2, 1}, true, std::nullopt},
      {"osp_even", {1, 2}, true, std::nullopt},
      {"gl11", {}, true, Scalar(0)},
      {"spin", {1}, true, frac(-3, 8)},
      {"spin", {3}, false, std::nullopt},
      {"abelian", {1}, true, Scalar(0)},
      {"trivial", {1}, true, Scalar(0)},
      {"double(abelian(1))", {}, true, Scalar(0)},
      {"double(gl11)", {}, true, std::nullopt},
      {"double(osp_even(1,1))", {}, true, std::nullopt},
  };
}

std::string descriptor_text(const InstanceDescriptor& d) {
  InstanceSpec s{d.name, d.parameters, nullptr};
  return d.parameters.empty() ? d.name : instance_text(s);
}

}  // namespace superlie
