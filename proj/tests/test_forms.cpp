#include "doctest.h"

#include <random>

#include "clgen/forms.hpp"
#include "clgen/linalg.hpp"

using namespace clgen;

namespace {

std::array<GF, 4> special(const GF& r2, const GF& r4)
{
  const Field& f = r2.field();
  return {f.el(0), r2, f.el(0), r4};
}

bool has_kind(const std::vector<InvariantForm>& forms, FormKind k)
{
  for (const auto& f : forms)
    if (f.kind == k)
      return true;
  return false;
}

std::vector<int> d_values(const Field& f)
{
  return f.p() == 2 ? std::vector<int>{1} : std::vector<int>{1, -1};
}

}  // namespace

TEST_CASE("explicit forms and their determinants")
{
  std::mt19937_64 rng(101);
  int checked = 0;
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {5, 2}}) {
    const Field& f = field_create(p, a);
    auto ks = admissible_k(f);
    std::uniform_int_distribution<code_t> pick(1, f.size() - 1);
    for (int trial = 0; trial < 200; trial++) {
      unsigned k = ks[trial % ks.size()];
      int d = trial % 2 ? 1 : -1;
      GF r4 = f.wrap(pick(rng));
      GF l = f.el(trial % 4 < 2 ? 1 : -1);
      GeneratorPair pr = make_pair(f, k, d, special(l * r4, r4));
      if (l.is_one() && (pr.s + f.el(2)).is_zero())
        continue;
      Matrix j = explicit_form(pr);
      CHECK(pr.x.transpose() * j * pr.x == j.scale(l * pr.d_el()));
      CHECK(pr.y.transpose() * j * pr.y == j);
      CHECK(j.det() == explicit_form_det(pr));
      CHECK(j.transpose() == j.scale(l));
      checked++;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("solve_forms finds the explicit forms")
{
  for (uint32_t p : {5u, 7u, 11u}) {
    const Field& f = field_create(p, 1);
    for (code_t c = 1; c < p; c++) {
      GF r4 = f.wrap(c);
      // Skew branch: d = -1, r2 = -r4.
      auto pr = make_pair(f, 3, -1, special(-r4, r4));
      if (enveloping_dim({pr.x, pr.y}) == 16) {
        auto sols = solve_forms({pr.x, pr.y}, 0, {{f.el(1), f.el(1)}});
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].basis.size() == 1);
        REQUIRE(sols[0].forms.size() == 1);
        const auto& form = sols[0].forms[0];
        CHECK(form.kind == FormKind::Skew);
        CHECK(form_is_valid(form, {pr.x, pr.y}));
        Matrix j = explicit_form(pr);
        // One-dimensional space: the explicit form is a multiple of the solution.
        GF ratio = j.at(0, 2) / form.J.at(0, 2);
        CHECK(form.J.scale(ratio) == j);
        CHECK(j.det() == (pr.s - f.el(2)).pow(4));
      }
      // Symmetric branch: d = 1, r2 = r4.
      auto sy = make_pair(f, 3, 1, special(r4, r4));
      if (enveloping_dim({sy.x, sy.y}) == 16) {
        auto forms = pair_forms(sy);
        REQUIRE(has_kind(forms, FormKind::Symmetric));
        for (const auto& form : forms)
          CHECK(form_is_valid(form, {sy.x, sy.y}));
      }
    }
  }
}

TEST_CASE("pairs with r2 = 0 fix no form")
{
  std::mt19937_64 rng(7);
  int tested = 0;
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{3, 2}, {5, 1}, {7, 1}, {2, 3}, {2, 2}}) {
    const Field& f = field_create(p, a);
    for (unsigned k : admissible_k(f))
      for (code_t c = 1; c < f.size(); c++) {
        auto pr = make_pair(f, k, d_values(f)[c % d_values(f).size()], special(f.el(0), f.wrap(c)));
        if (enveloping_dim({pr.x, pr.y}) < 16)
          continue;
        CHECK(pair_forms(pr, true).empty());
        auto fl = classic_necessary(pr);
        CHECK_FALSE(fl.co_csp);
        CHECK_FALSE(fl.cu);
        tested++;
      }
  }
  CHECK(tested > 50);
}

TEST_CASE("necessary conditions hold whenever a form is fixed")
{
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    const Field& f = field_create(p, a);
    for (unsigned k : admissible_k(f))
      for (int d : d_values(f))
        for (code_t c2 = 0; c2 < f.size(); c2++)
          for (code_t c4 = 1; c4 < f.size(); c4++) {
            GeneratorPair pr;
            try {
              pr = make_pair(f, k, d, special(f.wrap(c2), f.wrap(c4)));
            } catch (const Error&) {
              continue;
            }
            if (enveloping_dim({pr.x, pr.y}) < 16)
              continue;
            auto forms = pair_forms(pr);
            auto fl = classic_necessary(pr);
            CAPTURE(pr.str());
            for (const auto& form : forms) {
              CHECK(form_is_valid(form, {pr.x, pr.y}));
              // The multiplier of y is forced to be 1.
              CHECK(form.multipliers[1].is_one());
              if (form.kind == FormKind::Hermitian)
                CHECK(fl.cu);
              else
                CHECK(fl.co_csp);
            }
            // Conversely r2 = +-r4 gives a bilinear form.
            if (pr.r[1] == pr.r[3] || pr.r[1] == -pr.r[3])
              CHECK_FALSE(forms.empty());
          }
  }
}

TEST_CASE("unitary pairs fix a hermitian form")
{
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field& fq = field_create(p, a);
    const Field& f = field_create(p, 2 * a);
    uint64_t q = fq.size();
    int found = 0;
    for (code_t c = 1; c < f.size() && found < 12; c++) {
      GF r4 = f.wrap(c);
      if (f.min_degree(c) != f.degree())
        continue;
      for (code_t sc = 0; sc < q; sc++) {
        GF s = fq.wrap(sc).embed(f);
        for (int d : d_values(f)) {
          GeneratorPair pr;
          try {
            pr = make_pair_s(f, s, d, special(f.el(d) * r4.pow(q), r4));
          } catch (const Error&) {
            continue;
          }
          if (enveloping_dim({pr.x, pr.y}) < 16)
            continue;
          CAPTURE(pr.str());
          auto forms = pair_forms(pr);
          CHECK(has_kind(forms, FormKind::Hermitian));
          CHECK(classic_necessary(pr).cu);
          found++;
        }
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("hermitian normalization in the full multiplier scan")
{
  const Field& f = field_create(3, 2);
  GF xi = f.generator();
  auto pr = make_pair_s(f, f.el(1), 1, {xi, xi, xi.pow(7), f.el(0)});
  auto sols = solve_forms({pr.x, pr.y}, 1, all_multipliers(f, 2));
  int herm = 0;
  for (const auto& sol : sols)
    for (const auto& form : sol.forms)
      if (form.kind == FormKind::Hermitian) {
        herm++;
        CHECK(form_is_valid(form, {pr.x, pr.y}));
      }
  CHECK(herm >= 1);
}

TEST_CASE("scott reports")
{
  const Field& f7 = field_create(7, 1);
  auto pr = make_pair(f7, 3, 1, special(f7.el(0), f7.el(1)));
  auto r = scott(pr);
  CHECK(r.d_x == 8);
  CHECK(r.d_y == 6);
  CHECK(r.d_xy == 4);
  CHECK(r.sum == 18);
  CHECK(r.rigid);
  CHECK(r.ds_x == 6);
  CHECK(r.ds_y == 4);
  auto id = scott(Matrix::identity(&f7, 4), Matrix::identity(&f7, 4));
  CHECK(id.d_x == 16);
  CHECK(id.d_y == 16);
  CHECK_FALSE(id.rigid);
  auto m = make_pair(f7, 3, -1, special(f7.el(-2), f7.el(2)));
  CHECK(scott(m).ds_x != 6);
}

TEST_CASE("orthogonal trap")
{
  // SL4(2): the three irreducible (2,3) tuples all have r4 = r2 + r3.
  const Field& f2 = field_create(2, 1);
  int irreducible = 0;
  for (code_t code = 0; code < 16; code++) {
    std::array<GF, 4> r{f2.wrap(code & 1), f2.wrap((code >> 1) & 1), f2.wrap((code >> 2) & 1),
                        f2.wrap((code >> 3) & 1)};
    auto pr = make_pair(f2, 3, 1, r);
    if (enveloping_dim({pr.x, pr.y}) < 16)
      continue;
    irreducible++;
    CHECK(pr.r[3] == pr.r[1] + pr.r[2]);
    CHECK(orthogonal_trap(pr));
    auto sc = scott(pr);
    CHECK(sc.ds_h == 1);
    CHECK(sc.ds_h_dual == 1);
  }
  CHECK(irreducible == 3);

  // Whenever the trap fires on an irreducible pair, a symmetric form is fixed.
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const Field& f = field_create(p, a);
    int fired = 0;
    for (int d : {1, -1})
      for (code_t c2 = 0; c2 < f.size(); c2++)
        for (code_t c4 = 1; c4 < f.size(); c4++) {
          auto pr = make_pair_s(f, f.el(-1), d, special(f.wrap(c2), f.wrap(c4)));
          if (enveloping_dim({pr.x, pr.y}) < 16 || !orthogonal_trap(pr))
            continue;
          fired++;
          CHECK(d == 1);
          CHECK(has_kind(pair_forms(pr), FormKind::Symmetric));
        }
    CHECK(fired > 0);
  }
  const Field& f7 = field_create(7, 1);
  CHECK_FALSE(orthogonal_trap(make_pair(f7, 3, -1, special(f7.el(-3), f7.el(3)))));
}

TEST_CASE("symmetric forms under the dimension bound")
{
  // If d_S^x + d_S^y >= 10 - deg(mu_xy)/2 + 2 and xy ~ (xy)^-1 on an
  // irreducible pair, the pair fixes a symmetric form.
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}}) {
    const Field& f = field_create(p, a);
    int hits = 0;
    for (unsigned k : admissible_k(f))
      for (int d : {1, -1})
        for (code_t c2 = 0; c2 < f.size(); c2++)
          for (code_t c4 = 1; c4 < f.size(); c4++) {
            GeneratorPair pr;
            try {
              pr = make_pair(f, k, d, special(f.wrap(c2), f.wrap(c4)));
            } catch (const Error&) {
              continue;
            }
            Matrix xy = pr.xy();
            if (enveloping_dim({pr.x, pr.y}) < 16 || char_poly(xy) != char_poly(xy.inverse()))
              continue;
            auto sc = scott(pr);
            int deg_mu = min_poly(xy).degree();
            if (2 * static_cast<int>(sc.ds_x + sc.ds_y) < 2 * 12 - deg_mu)
              continue;
            hits++;
            CHECK(has_kind(pair_forms(pr), FormKind::Symmetric));
          }
    CHECK(hits > 0);
  }
}

TEST_CASE("conjugation-action traces")
{
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {3, 1}, {5, 1}, {7, 1}}) {
    const Field& f = field_create(p, a);
    for (unsigned k : admissible_k(f))
      for (int d : d_values(f))
        for (code_t c2 = 0; c2 < f.size(); c2++)
          for (code_t c4 = 1; c4 < f.size(); c4++) {
            GeneratorPair pr;
            try {
              pr = make_pair(f, k, d, special(f.wrap(c2), f.wrap(c4)));
            } catch (const Error&) {
              continue;
            }
            GF s = pr.s, dd = pr.d_el(), r2 = pr.r[1], r4 = pr.r[3];
            CHECK(conj_action_trace(pr.y) == (s + f.el(2)) * (s + f.el(2)));
            CHECK(conj_action_trace(pr.xy()) == dd * r2 * r4);
            CHECK(conj_action_trace(pr.xy().pow(2)) ==
                  r2 * r2 * r4 * r4 + f.el(2) * dd * s * (r2 * r2 + r4 * r4) + f.el(4) * s * s);
          }
  }
}

TEST_CASE("fixform bound")
{
  const Field& f7 = field_create(7, 1);
  GF one = f7.el(1);
  InvariantForm id{Matrix::identity(&f7, 4), FormKind::Symmetric, {one}, 0};
  auto c = fixform_bound_check(Matrix::identity(&f7, 4), id, 0);
  CHECK(c.ds == 10);
  CHECK(c.holds);
  // xy of a symplectic pair: deg mu = 4, middle coefficient -ds != 0.
  for (code_t c4 = 1; c4 < 7; c4++) {
    auto pr = make_pair(f7, 3, -1, special(-f7.wrap(c4), f7.wrap(c4)));
    if (enveloping_dim({pr.x, pr.y}) < 16)
      continue;
    InvariantForm j{explicit_form(pr), FormKind::Skew, {one, one}, 0};
    auto r = fixform_bound_check(pr.xy(), j, 2);
    CHECK(r.hypothesis_met);
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(fixform_bound_check(make_pair(f7, 3, 1, special(f7.el(0), one)).y, id, 1), Error);
}
