#include "clgen/forms.hpp"

#include <functional>
#include <random>

#include "clgen/linalg.hpp"

namespace clgen {

namespace {

Matrix unvec(const Field* f, const Matrix& row, size_t n)
{
  Matrix m(f, n, n);
  for (size_t i = 0; i < n * n; i++)
    m.raw(i / n, i % n) = row.raw(0, i);
  return m;
}

// Rows: coefficients of (g^T J gs - c J)_{ij} in the entries J_{ab}.
Matrix form_equations(const Matrix& g, const Matrix& gs, const GF& c)
{
  const Field& f = g.field();
  size_t n = g.rows();
  Matrix eq(&f, n * n, n * n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      for (size_t a = 0; a < n; a++)
        for (size_t b = 0; b < n; b++) {
          code_t v = f.mul(g.raw(a, i), gs.raw(b, j));
          if (a == i && b == j)
            v = f.sub(v, c.code());
          eq.raw(i * n + j, a * n + b) = v;
        }
  return eq;
}

// Equations restricting J to symmetric (sign = 1) or alternating (sign = -1) matrices.
Matrix symmetry_equations(const Field& f, size_t n, int sign)
{
  Matrix eq(&f, 0, n * n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = i; j < n; j++) {
      Matrix row(&f, 1, n * n);
      if (i == j) {
        if (sign == 1)
          continue;
        // Alternating: zero diagonal (also correct in characteristic 2).
        row.raw(0, i * n + i) = 1;
      } else {
        row.raw(0, i * n + j) = 1;
        row.raw(0, j * n + i) = f.from_int(-sign);
      }
      eq = eq.vstack(row);
    }
  return eq;
}

// A nondegenerate element of the row space of `basis` (rows are vec(J)),
// trying basis vectors first, then seeded random combinations.
std::optional<Matrix> nondegenerate_in(const Matrix& basis, size_t n, const std::function<bool(const Matrix&)>& accept)
{
  const Field* f = basis.field_ptr();
  for (size_t i = 0; i < basis.rows(); i++) {
    Matrix j = unvec(f, basis.row(i), n);
    if (!j.det().is_zero() && accept(j))
      return j;
  }
  if (basis.rows() < 2)
    return std::nullopt;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<code_t> pick(0, f->size() - 1);
  for (int trial = 0; trial < 64; trial++) {
    Matrix v(f, 1, basis.cols());
    for (size_t i = 0; i < basis.rows(); i++) {
      Matrix t = basis.row(i).scale(f->wrap(pick(rng)));
      v = v + t;
    }
    Matrix j = unvec(f, v, n);
    if (!j.det().is_zero() && accept(j))
      return j;
  }
  return std::nullopt;
}

// Scales J by some alpha so that (J^T)^sigma = J; nullopt if impossible.
std::optional<Matrix> hermitian_normalize(const Matrix& j, unsigned sigma_power)
{
  const Field& f = j.field();
  Matrix jt = j.transpose().frob(sigma_power);
  // (J^T)^sigma = beta J for some beta.
  std::optional<GF> beta;
  for (size_t i = 0; i < j.rows() && !beta; i++)
    for (size_t k = 0; k < j.cols() && !beta; k++)
      if (j.raw(i, k) != 0)
        beta = jt.at(i, k) / j.at(i, k);
  if (!beta || jt != j.scale(*beta))
    return std::nullopt;
  // (alpha J)^T sigma = alpha^sigma beta J, so alpha^sigma beta = alpha.
  for (code_t a = 1; a < f.size(); a++) {
    GF alpha = f.wrap(a);
    if (alpha.frob(sigma_power) * *beta == alpha)
      return j.scale(alpha);
  }
  return std::nullopt;
}

}  // namespace

std::string form_kind_name(FormKind k)
{
  switch (k) {
    case FormKind::Symmetric:
      return "symmetric";
    case FormKind::Skew:
      return "skew";
    case FormKind::Hermitian:
      return "hermitian";
    case FormKind::Bilinear:
      return "bilinear";
  }
  return "?";
}

std::vector<std::vector<GF>> sign_multipliers(const Field& f, size_t n)
{
  std::vector<GF> signs{f.el(1)};
  if (f.p() != 2)
    signs.push_back(f.el(-1));
  std::vector<std::vector<GF>> out{{}};
  for (size_t i = 0; i < n; i++) {
    std::vector<std::vector<GF>> next;
    for (const auto& t : out)
      for (const GF& s : signs) {
        auto u = t;
        u.push_back(s);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

std::vector<std::vector<GF>> all_multipliers(const Field& f, size_t n)
{
  std::vector<std::vector<GF>> out{{}};
  for (size_t i = 0; i < n; i++) {
    std::vector<std::vector<GF>> next;
    for (const auto& t : out)
      for (code_t c = 1; c < f.size(); c++) {
        auto u = t;
        u.push_back(f.wrap(c));
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

std::vector<FormSolution> solve_forms(const std::vector<Matrix>& gens, unsigned sigma_power,
                                      const std::vector<std::vector<GF>>& multiplier_scan)
{
  std::vector<FormSolution> out;
  if (gens.empty())
    return out;
  const Field* f = gens[0].field_ptr();
  size_t n = gens[0].rows();
  std::vector<Matrix> frobbed;
  for (const Matrix& g : gens)
    frobbed.push_back(sigma_power == 0 ? g : g.frob(sigma_power));

  for (const auto& mult : multiplier_scan) {
    if (mult.size() != gens.size())
      throw Error(ErrorCode::ArityMismatch, "one multiplier per generator");
    Matrix eq(f, 0, n * n);
    for (size_t i = 0; i < gens.size(); i++)
      eq = eq.vstack(form_equations(gens[i], frobbed[i], mult[i]));
    Matrix basis = eq.nullspace();
    if (basis.rows() == 0)
      continue;
    FormSolution sol;
    sol.multipliers = mult;
    sol.sigma_power = sigma_power;
    for (size_t i = 0; i < basis.rows(); i++)
      sol.basis.push_back(unvec(f, basis.row(i), n));

    auto any = [](const Matrix&) { return true; };
    if (sigma_power == 0) {
      // Symmetric and alternating subspaces of the solution space.
      for (int sign : {1, -1}) {
        Matrix sub = eq.vstack(symmetry_equations(*f, n, sign)).nullspace();
        if (sub.rows() == 0)
          continue;
        if (auto j = nondegenerate_in(sub, n, any)) {
          FormKind kind = sign == 1 ? FormKind::Symmetric : FormKind::Skew;
          // In characteristic 2 an alternating form is also symmetric; label it skew.
          if (sign == 1 && f->p() == 2) {
            bool alternating = true;
            for (size_t i = 0; i < n; i++)
              alternating = alternating && j->raw(i, i) == 0;
            if (alternating)
              kind = FormKind::Skew;
          }
          bool dup = false;
          for (const auto& e : sol.forms)
            dup = dup || e.kind == kind;
          if (!dup)
            sol.forms.push_back({*j, kind, mult, 0});
        }
      }
      if (sol.forms.empty())
        if (auto j = nondegenerate_in(basis, n, any))
          sol.forms.push_back({*j, FormKind::Bilinear, mult, 0});
    } else {
      std::optional<Matrix> herm;
      auto accept = [&](const Matrix& j) {
        herm = hermitian_normalize(j, sigma_power);
        return herm.has_value();
      };
      if (nondegenerate_in(basis, n, accept))
        sol.forms.push_back({*herm, FormKind::Hermitian, mult, sigma_power});
      else if (auto j = nondegenerate_in(basis, n, any))
        sol.forms.push_back({*j, FormKind::Bilinear, mult, sigma_power});
    }
    sol.only_degenerate = sol.forms.empty();
    out.push_back(sol);
  }
  return out;
}

std::vector<InvariantForm> pair_forms(const GeneratorPair& pr, bool full_scan)
{
  std::vector<Matrix> gens{pr.x, pr.y};
  const Field& f = pr.f();
  auto scan = full_scan ? all_multipliers(f, 2) : sign_multipliers(f, 2);
  std::vector<InvariantForm> out;
  for (const auto& sol : solve_forms(gens, 0, scan))
    for (const auto& form : sol.forms)
      out.push_back(form);
  if (f.degree() % 2 == 0)
    for (const auto& sol : solve_forms(gens, f.degree() / 2, scan))
      for (const auto& form : sol.forms)
        out.push_back(form);
  return out;
}

bool form_is_valid(const InvariantForm& form, const std::vector<Matrix>& gens)
{
  if (form.J.det().is_zero() || form.multipliers.size() != gens.size())
    return false;
  for (size_t i = 0; i < gens.size(); i++) {
    Matrix gs = form.sigma_power == 0 ? gens[i] : gens[i].frob(form.sigma_power);
    if (gens[i].transpose() * form.J * gs != form.J.scale(form.multipliers[i]))
      return false;
  }
  Matrix jt = form.J.transpose();
  switch (form.kind) {
    case FormKind::Symmetric:
      return jt == form.J;
    case FormKind::Skew: {
      bool zero_diag = true;
      for (size_t i = 0; i < form.J.rows(); i++)
        zero_diag = zero_diag && form.J.raw(i, i) == 0;
      return jt == -form.J && zero_diag;
    }
    case FormKind::Hermitian:
      return jt.frob(form.sigma_power) == form.J;
    case FormKind::Bilinear:
      return true;
  }
  return false;
}

ClassicFlags classic_necessary(const GeneratorPair& pr)
{
  if (!pr.specialized())
    throw Error(ErrorCode::RequiresSpecialization, "classical-group conditions need r1 = r3 = 0");
  ClassicFlags fl;
  GF d = pr.d_el(), r2 = pr.r[1], r4 = pr.r[3];
  fl.co_csp = r2 == d * r4 || r2 == -(d * r4);
  const Field& f = pr.f();
  if (f.degree() % 2 == 0) {
    unsigned half = f.degree() / 2;
    GF r4s = r4.frob(half);
    fl.cu = pr.s.frob(half) == pr.s && (r2 == d * r4s || r2 == -(d * r4s));
  }
  return fl;
}

ScottReport scott(const Matrix& x, const Matrix& y)
{
  ScottReport r;
  Matrix xy = x * y;
  r.d_x = centralizer_dim(x);
  r.d_y = centralizer_dim(y);
  r.d_xy = centralizer_dim(xy);
  r.sum = r.d_x + r.d_y + r.d_xy;
  size_t n = x.rows();
  r.rigid = r.sum == n * n + 2;
  r.ds_x = sym_fixed_dim({x}, false);
  r.ds_y = sym_fixed_dim({y}, false);
  r.ds_xy = sym_fixed_dim({xy}, false);
  r.ds_h = sym_fixed_dim({x, y}, false);
  r.ds_h_dual = sym_fixed_dim({x, y}, true);
  return r;
}

ScottReport scott(const GeneratorPair& pr)
{
  return scott(pr.x, pr.y);
}

bool orthogonal_trap(const GeneratorPair& pr)
{
  Matrix xy = pr.xy();
  unsigned sum = sym_fixed_dim({pr.x}, false) + sym_fixed_dim({pr.y}, false);
  if (sum != 10)
    return false;
  return char_poly(xy) == char_poly(xy.inverse()) && similarity_invariants(xy).factors.size() == 1;
}

GF conj_action_trace(const Matrix& g)
{
  GF closed = g.trace() * g.inverse().trace();
  GF direct = conj_action(g).trace();
  if (closed != direct)
    throw Error(ErrorCode::InternalMismatch, "conjugation-action trace mismatch");
  return closed;
}

FixformCheck fixform_bound_check(const Matrix& g, const InvariantForm& form, unsigned a)
{
  if (g.transpose() * form.J * g != form.J)
    throw Error(ErrorCode::HypothesisNotMet, "g does not fix the form");
  FixformCheck c;
  Poly mu = min_poly(g);
  int deg = mu.degree();
  c.hypothesis_met = deg > static_cast<int>(2 * a) || (deg == static_cast<int>(2 * a) && !mu.coeff(a).is_zero());
  c.ds = sym_fixed_dim({g}, false);
  c.holds = c.ds >= a;
  return c;
}

Matrix explicit_form(const GeneratorPair& pr)
{
  if (!pr.specialized())
    throw Error(ErrorCode::HypothesisNotMet, "explicit form needs r1 = r3 = 0");
  const Field& f = pr.f();
  GF r2 = pr.r[1], r4 = pr.r[3], s = pr.s, d = pr.d_el();
  GF l;
  if (r2 == r4)
    l = f.el(1);
  else if (r2 == -r4)
    l = f.el(-1);
  else
    throw Error(ErrorCode::HypothesisNotMet, "explicit form needs r2 = +-r4");
  GF two = f.el(2);
  GF i1 = f.el(0);
  if (l.is_one()) {
    if ((s + two).is_zero())
      throw Error(ErrorCode::HypothesisNotMet, "explicit symmetric form needs s != -2");
    i1 = (two - s - d * r4 * r4) / (s + two);
  }
  GF i2 = two - s - two * i1;
  return Matrix::from_rows({{two * i1, i2, r4, r4},
                            {l * i2, two * i1, r4, r4},
                            {l * r4, l * r4, two * d * i1, d * l * i2},
                            {l * r4, l * r4, d * i2, two * d * i1}});
}

GF explicit_form_det(const GeneratorPair& pr)
{
  const Field& f = pr.f();
  GF s = pr.s, r4 = pr.r[3], d = pr.d_el(), two = f.el(2);
  if (pr.r[1] == r4) {
    GF t = (s - two) * (s - two) - f.el(4) * d * r4 * r4;
    return t.pow(3) / ((s + two) * (s + two));
  }
  return (s - two).pow(4);
}

}  // namespace clgen
