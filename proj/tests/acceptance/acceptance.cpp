// One PASS/FAIL line per acceptance criterion; nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "commands.hpp"
#include "superlie/catalog.hpp"

using namespace superlie;

namespace {

// Collects the first failure; later checks are still evaluated.
struct Tally {
  std::string failure;
  void check(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

QuadraticElement quad(const SpacePtr& v, Exponent e, Scalar c = 1) {
  return QuadraticElement(PolyElement::monomial(v, std::move(e), c));
}

void weyl_kernel(Tally& t) {
  oracle::Rng rng(101);
  auto v = standard_space(2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto u = PolyElement::variable(v, i), w = PolyElement::variable(v, j);
      t.check(weyl_commutator(u, w) == PolyElement::constant(v, 2 * pair(*v, basis_vector(*v, i), basis_vector(*v, j))),
              "uv - vu != 2(u,v)");
    }
  for (int k = 0; k < 100; ++k) {
    const auto a = rng.poly(v, 4, 2), b = rng.poly(v, 4, 2), c = rng.poly(v, 4, 2);
    t.check(weyl_product(weyl_product(a, b), c) == weyl_product(a, weyl_product(b, c)), "associativity");
    t.check(weyl_product(a, b) == oracle::weyl(a, b), "gamma oracle");
  }
  for (int k = 0; k < 100; ++k) {
    std::vector<Vector> us, ws;
    const long n = rng.integer(0, 4), m = rng.integer(0, 4);
    for (long i = 0; i < n; ++i) us.push_back(rng.vector(4));
    for (long i = 0; i < m; ++i) ws.push_back(rng.vector(4));
    const auto y = oracle::product_of(v, us), z = oracle::product_of(v, ws);
    const Scalar expected = oracle::permanent_form(*v, us, ws);
    t.check(chi(weyl_product(y, z)) == expected, "chi(y∘z) vs permanent");
    t.check(bilinear_form(y, z) == expected, "bilinear_form vs permanent");
  }
}

void powers(Tally& t) {
  oracle::Rng rng(102);
  auto v = standard_space(1);
  for (int k = 0; k < 5; ++k) {
    const Vector u = rng.vector(2), w = rng.vector(2);
    Scalar fact = 1, p = 1;
    for (unsigned n = 1; n <= 5; ++n) {
      fact *= n;
      p *= pair(*v, u, w);
      const auto un = oracle::product_of(v, std::vector<Vector>(n, u));
      const auto wn = oracle::product_of(v, std::vector<Vector>(n, w));
      t.check(bilinear_form(un, wn) == fact * p, "(u^n, v^n) for n = " + std::to_string(n));
    }
  }
}

void sp_bridge(Tally& t) {
  oracle::Rng rng(103);
  for (std::size_t m = 1; m <= 3; ++m) {
    auto v = standard_space(m);
    const QuadraticBasis basis(v);
    const auto sp = sp_basis(*v);
    t.check(sp.size() == m * (2 * m + 1), "sp basis size");
    for (const auto& alpha : sp) {
      t.check(a_map(basis.a_inverse(SpElement(v, alpha))).matrix() == alpha, "A∘A⁻¹ != id");
      for (const auto& beta : sp) {
        const auto w = basis.a_inverse(SpElement(v, alpha)), z = basis.a_inverse(SpElement(v, beta));
        t.check(a_map(QuadraticElement(weyl_commutator(w.poly(), z.poly()))).matrix() == commutator(alpha, beta),
                "A not a homomorphism");
      }
    }
    for (std::size_t p = 0; p < basis.size(); ++p)
      t.check(basis.a_inverse(a_map(basis.element(p))) == basis.element(p), "A⁻¹∘A != id");
    for (int k = 0; k < 10; ++k) {
      const QuadraticElement w(rng.homogeneous(v, 2, 4));
      const auto a = rng.poly(v, 3, 4);
      t.check(tau_action(a_map(w), a) == weyl_commutator(w.poly(), a), "tau(A(w)) != ad w");
    }
  }
}

void trace_ratio(Tally& t, std::string& note) {
  Scalar first = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    auto v = standard_space(m);
    const QuadraticBasis basis(v);
    // independent fit: every pair with nonzero trace gives the same ratio
    std::optional<Scalar> c;
    for (std::size_t p = 0; p < basis.size(); ++p)
      for (std::size_t q = 0; q < basis.size(); ++q) {
        const auto w = basis.element(p), z = basis.element(q);
        const Scalar tr = trace_of_product(a_map(w).matrix(), a_map(z).matrix());
        const Scalar f = bilinear_form(w.poly(), z.poly());
        if (tr == 0) {
          t.check(f == 0, "form nonzero where trace vanishes");
          continue;
        }
        if (!c) c = f / tr;
        t.check(f == *c * tr, "no single ratio");
      }
    t.check(c.has_value(), "no pairs");
    if (!c) return;
    t.check(abs(*c) == frac(1, 8), "|c| != 1/8");
    t.check(*c == basis.trace_ratio(), "engine ratio differs");
    if (m == 1) first = *c;
    t.check(*c == first, "sign varies with dim");
  }
  note = "fitted c = " + to_string(first);
}

void osp12(Tally& t) {
  const auto rep = build_osp_even(1, 1);
  auto v = rep.space;
  // Casimir by hand through the gamma oracle, dual basis (H/2, F, E)
  const auto h = quad(v, {1, 1}, frac(-1, 2)), e = quad(v, {2, 0}, frac(1, 4)), f = quad(v, {0, 2}, frac(-1, 4));
  t.check(nu_star(rep, 0) == h && nu_star(rep, 1) == e && nu_star(rep, 2) == f, "nu_* of sl2");
  const PolyElement cas = frac(1, 2) * oracle::weyl(h.poly(), h.poly()) + oracle::weyl(e.poly(), f.poly()) +
                          oracle::weyl(f.poly(), e.poly());
  t.check(cas == PolyElement::constant(v, frac(-3, 8)), "oracle casimir != -3/8");
  const auto r = decide(rep);
  t.check(r.verdict, "verdict false");
  t.check(r.casimir_scalar && *r.casimir_scalar == frac(-3, 8), "casimir scalar");
  const auto s = construct_superalgebra(rep);
  t.check(s.dim() == 5, "dim != 5");
  for (const auto& c : verify_superalgebra(s)) t.check(c.pass, c.name);
  const auto ti = trace_identity_check(rep);
  t.check(ti.constant_used == frac(-1, 8) && ti.lhs == ti.rhs, "trace identity");
  // tr ν(Cas) directly: H·H/2 + E·F + F·E
  const auto& m = rep.matrices;
  const Matrix nu_cas = frac(1, 2) * (m[0] * m[0]) + m[1] * m[2] + m[2] * m[1];
  Scalar tr = 0;
  for (std::size_t i = 0; i < 2; ++i) tr += nu_cas(i, i);
  t.check(tr == 3, "tr ν(Cas) != 3");
  t.check(ti.constant_used * tr == ti.lhs, "c·tr ν(Cas) != scalar");
}

void gl11(Tally& t) {
  const auto rep = build_gl11_even();
  const auto r = decide(rep);
  t.check(r.verdict && r.casimir_scalar && *r.casimir_scalar == 0, "verdict/scalar");
  const auto s = construct_superalgebra(rep);
  const Matrix e12{{0, 1}, {0, 0}}, e21{{0, 0}, {1, 0}};
  const Matrix sc = oracle::supercommutator(e12, true, e21, true);
  t.check(sc == Matrix::identity(2), "oracle supercommutator != I");
  // h₁ = E11 and h₂ = E22 in the defining picture, so I = h₁ + h₂
  t.check(s.odd_odd.at(0, 1) == Vector{sc(0, 0), sc(1, 1)}, "odd bracket != h1 + h2");
  t.check(s.odd_odd.at(0, 0) == Vector{0, 0} && s.odd_odd.at(1, 1) == Vector{0, 0}, "diagonal odd brackets");
}

void spin32(Tally& t) {
  const auto rep = build_spin_rep(3);
  const auto r = decide(rep);
  t.check(!r.verdict, "verdict true");
  t.check(!r.obstruction.is_zero() && r.obstruction.is_homogeneous(4), "obstruction not nonzero degree 4");
  const auto s = construct_superalgebra_unchecked(rep);
  for (const auto& c : verify_superalgebra(s)) t.check(c.pass == (c.name != "jacobi_odd_odd_odd"), c.name);
  std::size_t triples = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b)
      for (std::size_t c = b; c < 4; ++c) {
        ++triples;
        t.check(jacobiator(s, a, b, c) == triple_contraction(r.obstruction, a, b, c), "jacobiator identity");
      }
  t.check(triples == 20, "triple count");
}

void osp_even(Tally& t, std::string& note) {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = build_osp_even(m, n);
    const bool verdict = decide(rep).verdict;
    bool all = true;
    for (const auto& c : verify_superalgebra(construct_superalgebra(rep))) all = all && c.pass;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    t.check(verdict, tag + " verdict");
    t.check(all, tag + " verify");
    t.check(secs < 10, tag + " too slow");
    std::ostringstream s;
    s.precision(3);
    s << tag << " " << secs << "s ";
    note += s.str();
  }
}

void doubles(Tally& t) {
  for (const auto& inner : {build_abelian(1), build_gl11_even(), build_osp_even(1, 1)}) {
    const auto d = build_double(construct_superalgebra(inner));
    t.check(decide(d.rep).verdict, "double verdict");
    t.check(construct_superalgebra(d.rep).odd_odd == d.tables.odd_odd, "odd-odd tables differ");
  }
}

void scaling(Tally& t) {
  for (const auto& desc : curated_instances()) {
    if (!desc.expected_verdict) continue;
    const auto rep = build_instance(descriptor_text(desc));
    const auto r = decide(rep);
    const auto s = construct_superalgebra(rep);
    for (const Scalar lambda : {Scalar(2), Scalar(-3), frac(1, 5)}) {
      const auto scaled = scale_form(rep, lambda);
      const auto rs = decide(scaled);
      t.check(rs.verdict, descriptor_text(desc) + " verdict");
      if (!rs.verdict) continue;
      t.check(*rs.casimir_scalar == *r.casimir_scalar / lambda, descriptor_text(desc) + " scalar");
      const auto ss = construct_superalgebra(scaled);
      for (std::size_t a = 0; a < s.odd_dim; ++a)
        for (std::size_t b = a; b < s.odd_dim; ++b)
          t.check(ss.odd_odd.at(a, b) == (1 / lambda) * s.odd_odd.at(a, b), descriptor_text(desc) + " brackets");
    }
  }
}

void determinism(Tally& t) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "superlie_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ostringstream out, err;
  for (const char* name : {"osp_even(2,1)", "spin(3)", "gl11"}) {
    const std::string in = (dir / "p.json").string(), a = (dir / "a.json").string(), b = (dir / "b.json").string();
    t.check(cli::cmd_catalog(name, {}, in, out, err) == 0, "catalog failed");
    t.check(cli::cmd_test(in, a, out, err) == 0, "first run failed");
    t.check(cli::cmd_test(in, b, out, err) == 0, "second run failed");
    t.check(io::read_file(a) == io::read_file(b), std::string(name) + " reports differ");
  }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Tally&, std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "weyl kernel", [](Tally& t, std::string&) { weyl_kernel(t); }},
      {2, "power pairing", [](Tally& t, std::string&) { powers(t); }},
      {3, "sp bridge", [](Tally& t, std::string&) { sp_bridge(t); }},
      {4, "trace ratio", trace_ratio},
      {5, "osp(1|2) end to end", [](Tally& t, std::string&) { osp12(t); }},
      {6, "gl(1|1) even part", [](Tally& t, std::string&) { gl11(t); }},
      {7, "spin 3/2 obstruction", [](Tally& t, std::string&) { spin32(t); }},
      {8, "osp_even calibration", osp_even},
      {9, "double round trip", [](Tally& t, std::string&) { doubles(t); }},
      {10, "scale equivariance", [](Tally& t, std::string&) { scaling(t); }},
      {11, "determinism", [](Tally& t, std::string&) { determinism(t); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    std::string note;
    try {
      c.run(t, note);
    } catch (const std::exception& e) {
      t.check(false, std::string("threw: ") + e.what());
    }
    const bool ok = t.failure.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title;
    if (!ok) std::cout << " -- " << t.failure;
    else if (!note.empty()) std::cout << " -- " << note;
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}
