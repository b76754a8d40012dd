#include "superlie/polyweyl.hpp"

#include <numeric>
#include <utility>

#include "superlie/errors.hpp"

namespace superlie {

namespace {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Row vector of (u, x_j) for j over the basis.
Vector contraction_weights(const SymplecticSpace& space, const Vector& u) {
  if (u.size() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "contraction vector");
  const Matrix& w = space.omega();
  Vector out = zero_vector(space.dim());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < space.dim(); ++j)
      if (w(i, j) != 0) out[j] += u[i] * w(i, j);
  }
  return out;
}

PolyElement iota_weights(const Vector& weights, const PolyElement& a) {
  PolyElement out(a.space());
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0 || weights[j] == 0) continue;
      Exponent d = e;
      --d[j];
      out.add_term(d, c * weights[j] * e[j]);
    }
  }
  return out;
}

/// x_i · b
PolyElement times_variable(std::size_t i, const PolyElement& b) {
  PolyElement out(b.space());
  for (const auto& [e, c] : b.terms()) {
    Exponent d = e;
    ++d[i];
    out.add_term(d, c);
  }
  return out;
}

/// Computes x^α ∘ b for a fixed right factor, memoized on α.
class MonomialWeyl {
public:
  explicit MonomialWeyl(const PolyElement& b) : b_(b), space_(*b.space()) {}

  const PolyElement& apply(const Exponent& alpha) {
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
    PolyElement result = compute(alpha);
    return memo_.emplace(alpha, std::move(result)).first->second;
  }

private:
  PolyElement compute(const Exponent& alpha) {
    std::size_t i = 0;
    while (i < alpha.size() && alpha[i] == 0) ++i;
    if (i == alpha.size()) return b_;
    Exponent rest = alpha;
    --rest[i];
    // x^α = x_i·y with y = x^rest; x_i·y = x_i∘y − ι(x_i)y in W(v).
    const PolyElement inner = apply(rest);
    PolyElement result = times_variable(i, inner);
    const Matrix& w = space_.omega();
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (w(i, j) != 0) {
        // ι(x_i) on inner
        for (const auto& [e, c] : inner.terms()) {
          if (e[j] == 0) continue;
          Exponent d = e;
          --d[j];
          result.add_term(d, c * w(i, j) * e[j]);
        }
      }
    }
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (w(i, j) == 0 || rest[j] == 0) continue;
      Exponent lower = rest;
      --lower[j];
      const Scalar f = w(i, j) * rest[j];
      const PolyElement& sub = apply(lower);
      for (const auto& [e, c] : sub.terms()) result.add_term(e, -f * c);
    }
    return result;
  }

  const PolyElement& b_;
  const SymplecticSpace& space_;
  std::map<Exponent, PolyElement> memo_;
};

}  // namespace

PolyElement::PolyElement(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw Error(ErrorCode::InvalidInput, "null space");
}

PolyElement PolyElement::constant(SpacePtr space, const Scalar& c) {
  PolyElement p(std::move(space));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

PolyElement PolyElement::linear(SpacePtr space, const Vector& v) {
  PolyElement p(std::move(space));
  if (v.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "linear element");
  for (std::size_t i = 0; i < v.size(); ++i) {
    Exponent e(p.nvars(), 0);
    e[i] = 1;
    p.add_term(e, v[i]);
  }
  return p;
}

PolyElement PolyElement::variable(SpacePtr space, std::size_t i) {
  PolyElement p(std::move(space));
  if (i >= p.nvars()) throw Error(ErrorCode::DimensionMismatch, "variable index");
  Exponent e(p.nvars(), 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

PolyElement PolyElement::monomial(SpacePtr space, Exponent exp, const Scalar& coeff) {
  PolyElement p(std::move(space));
  if (exp.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "exponent length");
  p.add_term(exp, coeff);
  return p;
}

int PolyElement::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

bool PolyElement::is_homogeneous(unsigned n) const {
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != n) return false;
  return true;
}

Scalar PolyElement::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Vector PolyElement::linear_part() const {
  Vector v = zero_vector(nvars());
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != 1) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) v[i] = c;
  }
  return v;
}

void PolyElement::add_term(const Exponent& e, const Scalar& c) {
  if (c == 0) return;
  if (e.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "exponent length");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  require_same_space(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
  require_same_space(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyElement& PolyElement::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
PolyElement operator-(PolyElement a) { return a *= Scalar(-1); }
PolyElement operator*(const Scalar& s, PolyElement a) { return a *= s; }

void require_same_space(const PolyElement& a, const PolyElement& b) {
  if (a.space() != b.space() && !(*a.space() == *b.space()))
    throw Error(ErrorCode::SpaceMismatch);
}

PolyElement sym_product(const PolyElement& a, const PolyElement& b) {
  require_same_space(a, b);
  PolyElement out(a.space());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

PolyElement iota(const Vector& u, const PolyElement& a) {
  return iota_weights(contraction_weights(*a.space(), u), a);
}

PolyElement weyl_product(const PolyElement& a, const PolyElement& b) {
  require_same_space(a, b);
  PolyElement out(a.space());
  if (a.is_zero() || b.is_zero()) return out;
  MonomialWeyl left(b);
  for (const auto& [e, c] : a.terms())
    for (const auto& [eb, cb] : left.apply(e).terms()) out.add_term(eb, c * cb);
  return out;
}

PolyElement weyl_commutator(const PolyElement& a, const PolyElement& b) {
  return weyl_product(a, b) - weyl_product(b, a);
}

Scalar chi(const PolyElement& a) { return a.coeff(Exponent(a.nvars(), 0)); }

Scalar bilinear_form(const PolyElement& a, const PolyElement& b) {
  return chi(weyl_product(a, b));
}

GradedDecomposition grade(const PolyElement& a) {
  GradedDecomposition out;
  for (const auto& [e, c] : a.terms()) {
    const unsigned n = total_degree(e);
    out.try_emplace(n, a.space()).first->second.add_term(e, c);
  }
  return out;
}

PolyElement component(const PolyElement& a, unsigned n) {
  PolyElement out(a.space());
  for (const auto& [e, c] : a.terms())
    if (total_degree(e) == n) out.add_term(e, c);
  return out;
}

PolyElement reassemble(const GradedDecomposition& g, SpacePtr space) {
  PolyElement out(std::move(space));
  for (const auto& [n, p] : g) out += p;
  return out;
}

std::vector<JComponent> apply_J(const PolyElement& a) {
  std::vector<JComponent> out;
  for (auto& [n, p] : grade(a)) {
    const int sign = (n / 2) % 2 == 0 ? 1 : -1;
    out.push_back({n, sign, n % 2 == 1, Scalar(sign) * p});
  }
  return out;
}

PolyElement apply_J_squared(const PolyElement& a) {
  PolyElement out(a.space());
  for (const auto& [e, c] : a.terms()) out.add_term(e, total_degree(e) % 2 == 0 ? c : -c);
  return out;
}

bool is_J_fixed(const PolyElement& a) {
  for (const auto& [e, c] : a.terms())
    if (total_degree(e) % 4 != 0) return false;
  return true;
}

}  // namespace superlie
