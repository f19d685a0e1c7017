#include "doctest.h"

#include <random>

#include "clgen/linalg.hpp"

using namespace clgen;

namespace {

Matrix shape_x(const Field& f, int d)
{
  return Matrix::from_ints(&f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {d, 0, 0, 0}, {0, d, 0, 0}});
}

Matrix shape_y(const GF& s, const std::vector<GF>& r)
{
  const Field& f = s.field();
  GF o = f.el(0), one = f.el(1);
  return Matrix::from_rows({{one, o, r[0], r[1]}, {o, one, r[2], r[3]}, {o, o, o, -one}, {o, o, one, s}});
}

Matrix random_matrix(const Field& f, size_t n, std::mt19937_64& rng)
{
  std::uniform_int_distribution<code_t> pick(0, f.size() - 1);
  Matrix m(&f, n, n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      m.raw(i, j) = pick(rng);
  return m;
}

Matrix random_invertible(const Field& f, size_t n, std::mt19937_64& rng)
{
  while (true) {
    Matrix m = random_matrix(f, n, rng);
    if (!m.det().is_zero())
      return m;
  }
}

}  // namespace

TEST_CASE("characteristic polynomials")
{
  const Field& f = field_create(7, 1);
  Matrix id = Matrix::identity(&f, 4);
  Poly tm1(&f, std::vector<int64_t>{-1, 1});
  CHECK(char_poly(id) == tm1 * tm1 * tm1 * tm1);
  CHECK(char_poly(shape_x(f, 1)) == Poly(&f, std::vector<int64_t>{1, 0, -2, 0, 1}));
}

TEST_CASE("similarity invariants of the generator shapes")
{
  for (uint32_t p : {3u, 5u, 7u}) {
    const Field& f = field_create(p, 1);
    for (int d : {1, -1}) {
      auto inv = similarity_invariants(shape_x(f, d));
      REQUIRE(inv.factors.size() == 2);
      Poly expect(&f, std::vector<int64_t>{-d, 0, 1});
      CHECK(inv.factors[0] == expect);
      CHECK(inv.factors[1] == expect);
      CHECK(centralizer_dim(shape_x(f, d)) == 8);
    }
    for (int64_t s = 0; s < p; s++) {
      GF sv = f.el(s);
      Matrix y = shape_y(sv, {f.el(1), f.el(2), f.el(0), f.el(3)});
      auto inv = similarity_invariants(y);
      REQUIRE(inv.factors.size() == 2);
      CHECK(inv.factors[0] == Poly(&f, std::vector<int64_t>{-1, 1}));
      CHECK(inv.factors[1] == Poly(&f, std::vector<int64_t>{-1, 1 + s, -(1 + s), 1}));
      CHECK(centralizer_dim(y) == 6);
    }
    Matrix sc = Matrix::scalar(f.el(2), 4);
    auto inv = similarity_invariants(sc);
    CHECK(inv.factors.size() == 4);
    CHECK(centralizer_dim(sc) == 16);
  }
}

TEST_CASE("Cayley-Hamilton and invariant-factor products")
{
  std::mt19937_64 rng(11);
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 2}, {5, 2}}) {
    const Field& f = field_create(p, a);
    for (int trial = 0; trial < 100; trial++) {
      Matrix m = random_matrix(f, 4, rng);
      Poly cp = char_poly(m);
      CHECK(cp.degree() == 4);
      CHECK(poly_at(cp, m) == Matrix(&f, 4, 4));
      auto inv = similarity_invariants(m);
      CHECK(inv.product() == cp);
      for (size_t i = 0; i + 1 < inv.factors.size(); i++)
        CHECK((inv.factors[i + 1] % inv.factors[i]).is_zero());
      CHECK(poly_at(min_poly(m), m) == Matrix(&f, 4, 4));
      GF det_from_cp = cp.coeff(0);  // (-1)^4 det
      CHECK(det_from_cp == m.det());
    }
  }
}

TEST_CASE("centralizer algorithms agree on random matrices")
{
  std::mt19937_64 rng(5);
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 2}, {5, 2}}) {
    const Field& f = field_create(p, a);
    for (int trial = 0; trial < 1000; trial++) {
      Matrix m = random_matrix(f, 4, rng);
      // Bias towards derogatory matrices, where the two methods are most interesting.
      if (trial % 3 == 0)
        m = m * m.transpose() + Matrix::scalar(f.el(trial), 4);
      CHECK(centralizer_dim_by_invariants(m) == centralizer_dim_by_nullity(m));
    }
  }
}

TEST_CASE("enveloping algebra and invariant subspaces")
{
  const Field& f = field_create(3, 1);
  CHECK(enveloping_dim({Matrix::identity(&f, 4)}) == 1);
  auto line = invariant_subspace({Matrix::identity(&f, 4)}, 1);
  REQUIRE(line.has_value());
  CHECK(line->rows() == 1);

  // Enumeration and the eigenvector methods give the same existence answers.
  std::mt19937_64 rng(3);
  const Field& f9 = field_create(3, 2);
  for (int trial = 0; trial < 60; trial++) {
    Matrix g = random_invertible(f9, 4, rng);
    Matrix h = random_invertible(f9, 4, rng);
    if (trial % 2 == 0) {
      // Force a common invariant plane <e1, e2>.
      for (size_t i = 2; i < 4; i++)
        for (size_t j = 0; j < 2; j++) {
          g.raw(i, j) = 0;
          h.raw(i, j) = 0;
        }
      if (g.det().is_zero() || h.det().is_zero())
        continue;
    }
    std::vector<Matrix> gens{g, h, g * g};
    for (unsigned dim = 1; dim <= 3; dim++) {
      auto enumerated = invariant_subspace(gens, dim);
      std::optional<Matrix> structural;
      bool certified = true;
      try {
        structural = invariant_subspace(gens, dim, 0);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
        certified = false;
      }
      if (certified)
        CHECK(enumerated.has_value() == structural.has_value());
      if (structural) {
        CHECK(structural->rows() == dim);
        CHECK(spin(gens, *structural).rows() == dim);
      }
    }
    bool reducible = false;
    for (unsigned dim = 1; dim <= 3; dim++)
      reducible = reducible || invariant_subspace(gens, dim).has_value();
    // Over a finite field reducibility over F_9 implies a non-full algebra.
    if (reducible)
      CHECK(enveloping_dim(gens) < 16);
  }
}

TEST_CASE("symmetric-square fixed spaces")
{
  const Field& f = field_create(7, 1);
  CHECK(sym_fixed_dim({shape_x(f, 1)}, false) == 6);
  CHECK(sym_fixed_dim({shape_y(f.el(-1), {f.el(1), f.el(2), f.el(3), f.el(4)})}, false) == 4);
  CHECK(sym_fixed_dim({Matrix::identity(&f, 4)}, false) == 10);
  CHECK(sym_fixed_dim({Matrix::identity(&f, 4)}, true) == 10);
}

TEST_CASE("in characteristic 2, elements conjugate to their inverse fix at least n/2 symmetric dimensions")
{
  std::mt19937_64 rng(17);
  int hits = 0;
  for (unsigned a : {1u, 2u, 3u}) {
    const Field& f = field_create(2, a);
    for (int trial = 0; trial < 400; trial++) {
      Matrix g = random_invertible(f, 4, rng);
      if (trial % 2 == 0)
        g = g * g.transpose();  // symmetric products are often conjugate to their inverse
      auto a1 = similarity_invariants(g).factors;
      auto a2 = similarity_invariants(g.inverse()).factors;
      if (a1 != a2)
        continue;
      hits++;
      CHECK(sym_fixed_dim({g}, false) >= 2);
    }
  }
  CHECK(hits > 20);
}

TEST_CASE("cubic representation")
{
  const Field& f = field_create(7, 1);
  Matrix x2 = cubic_x2(&f);
  Matrix expect = Matrix::from_ints(&f, {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  CHECK(cubic_rep(x2) == expect);
  CHECK(cubic_rep(Matrix::identity(&f, 2)) == Matrix::identity(&f, 4));
  for (code_t rc = 1; rc < f.size(); rc++) {
    GF r = f.wrap(rc);
    Matrix q = cubic_conjugator(r);
    CHECK(q.det() == f.el(64 * 9) * r.pow(6));
    Matrix y2 = cubic_y2(r);
    CHECK(y2.det().is_one());
    Matrix phi_y = cubic_rep(y2);
    // Displayed entries of the image of y2.
    GF e = f.el(8).inv();
    CHECK(phi_y.at(0, 0) == -e);
    CHECK(phi_y.at(1, 1) == f.el(5) * e);
    CHECK(phi_y.at(0, 3) == f.el(27) * e / r.pow(3));
    CHECK(phi_y.at(3, 0) == -(r.pow(3) * e));
    CHECK(cubic_rep(x2 * y2) == cubic_rep(x2) * cubic_rep(y2));
    CHECK(cubic_rep(y2).det().is_one());
    // The conjugated image of x2 is the generator x with d = -1.
    CHECK(q.inverse() * cubic_rep(x2) * q == shape_x(f, -1));
  }
  const Field& f3 = field_create(3, 1);
  CHECK_THROWS_AS(cubic_rep(cubic_x2(&f3)), Error);
}

TEST_CASE("conjugation action trace is tr(g) tr(g^-1)")
{
  std::mt19937_64 rng(23);
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {3, 2}, {5, 1}}) {
    const Field& f = field_create(p, a);
    for (int trial = 0; trial < 200; trial++) {
      Matrix g = random_invertible(f, 4, rng);
      CHECK(conj_action(g).trace() == g.trace() * g.inverse().trace());
    }
  }
}
