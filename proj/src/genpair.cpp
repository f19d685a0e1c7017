#include "clgen/genpair.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "clgen/numtheory.hpp"

namespace clgen {

namespace {

bool is_k_special(const Field& f, unsigned k)
{
  uint32_t p = f.p();
  return k == p || k == 2 * p;
}

void check_y_order(const GeneratorPair& pr)
{
  // y has the eigenvalue 1, so its projective order equals its order.
  if (!pr.y.pow(pr.k).is_identity())
    throw Error(ErrorCode::InternalMismatch, "y^k is not the identity");
  for (auto [r, e] : factorize(pr.k)) {
    (void)e;
    if (pr.y.pow(pr.k / r).is_identity())
      throw Error(ErrorCode::InternalMismatch, "y has order smaller than k");
  }
}

GeneratorPair assemble(const Field& f, unsigned k, int d, const GF& s, const GF& eps, const std::array<GF, 4>& r)
{
  if (d != 1 && d != -1)
    throw Error(ErrorCode::Parse, "d must be 1 or -1");
  for (const GF& v : r)
    if (v.field_ptr() != &f)
      throw Error(ErrorCode::FieldMismatch, "r_i outside the pair's field");
  if (s == f.el(2) && r[0] == r[1] && r[2] == r[3])
    throw Error(ErrorCode::DegenerateY, "s = 2 requires (r1, r3) != (r2, r4)");
  GeneratorPair pr;
  pr.field = &f;
  pr.k = k;
  pr.d = d;
  pr.s = s;
  pr.eps = eps;
  pr.r = r;
  pr.x = pair_x(f, d);
  pr.y = pair_y(s, r);
  check_y_order(pr);
  return pr;
}

// Multiplicative order of a nonzero element.
uint64_t mult_order(const GF& e)
{
  const Field& f = e.field();
  uint64_t n = f.size() - 1;
  for (auto [r, m] : factorize(n)) {
    for (unsigned i = 0; i < m && n % r == 0 && e.pow(n / r).is_one(); i++)
      n /= r;
  }
  return n;
}

}  // namespace

Matrix pair_x(const Field& f, int d)
{
  return Matrix::from_ints(&f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {d, 0, 0, 0}, {0, d, 0, 0}});
}

Matrix pair_y(const GF& s, const std::array<GF, 4>& r)
{
  const Field& f = s.field();
  GF o = f.el(0), one = f.el(1);
  return Matrix::from_rows({{one, o, r[0], r[1]}, {o, one, r[2], r[3]}, {o, o, o, -one}, {o, o, one, s}});
}

GF epsilon_for(const Field& f, unsigned k)
{
  if (k < 3)
    throw Error(ErrorCode::OrderUnavailable, "k must be at least 3");
  if (is_k_special(f, k))
    return root_of_unity(f, k);
  uint64_t q = f.size();
  if (k % f.p() != 0 && (q - 1) % k == 0)
    return root_of_unity(f, k);
  if (k % f.p() != 0 && (q + 1) % k == 0)
    return root_of_unity(f.closure(), k);
  throw Error(ErrorCode::OrderUnavailable,
              "k = " + std::to_string(k) + " divides neither q-1 nor q+1 for q = " + std::to_string(q));
}

std::vector<unsigned> admissible_k(const Field& f, unsigned max_k)
{
  uint64_t q = f.size();
  if (max_k == 0)
    max_k = static_cast<unsigned>(std::max<uint64_t>(q + 1, 2 * f.p()));
  std::vector<unsigned> out;
  for (unsigned k = 3; k <= max_k; k++) {
    bool ok = is_k_special(f, k) || (k % f.p() != 0 && ((q - 1) % k == 0 || (q + 1) % k == 0));
    if (ok)
      out.push_back(k);
  }
  return out;
}

std::vector<GF> s_values(const Field& f, unsigned k)
{
  GF eps = epsilon_for(f, k);
  if (is_k_special(f, k))
    return {eps + eps.inv()};
  const Field& host = eps.field();
  uint64_t n = host.size() - 1;
  std::vector<GF> out;
  for (uint64_t j = 1; j < k; j++) {
    if (std::gcd<uint64_t>(j, k) != 1)
      continue;
    GF e = host.wrap(host.exp(n / k * j));
    GF s = e + e.inv();
    auto back = f.restrict_from(s.code(), host);
    if (!back)
      throw Error(ErrorCode::InternalMismatch, "eps + 1/eps outside the base field");
    out.push_back(f.wrap(*back));
  }
  std::sort(out.begin(), out.end(), [](const GF& a, const GF& b) { return a.code() < b.code(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GeneratorPair make_pair(const Field& f, unsigned k, int d, const std::array<GF, 4>& r)
{
  GF eps = epsilon_for(f, k);
  GF s_big = eps + eps.inv();
  GF s = s_big;
  if (eps.field_ptr() != &f) {
    auto back = f.restrict_from(s_big.code(), eps.field());
    if (!back)
      throw Error(ErrorCode::InternalMismatch, "eps + 1/eps outside the base field");
    s = f.wrap(*back);
  }
  return assemble(f, k, d, s, eps, r);
}

GeneratorPair make_pair_s(const Field& f, const GF& s, int d, const std::array<GF, 4>& r)
{
  if (s.field_ptr() != &f)
    throw Error(ErrorCode::FieldMismatch, "s outside the pair's field");
  uint32_t p = f.p();
  if (s == f.el(2)) {
    unsigned k = p == 2 ? 4 : p;
    return assemble(f, k, d, s, f.el(1), r);
  }
  if (s == f.el(-2))
    return assemble(f, 2 * p, d, s, f.el(-1), r);
  // eps is a root of t^2 - s t + 1; take the root with the least exponent.
  Poly m(&f, std::vector<code_t>{1, f.neg(s.code()), 1});
  std::vector<GF> roots = poly_roots(m);
  if (roots.empty())
    roots = poly_roots(m.embed(f.closure()));
  if (roots.empty())
    throw Error(ErrorCode::InternalMismatch, "t^2 - s t + 1 has no root in the quadratic extension");
  const Field& host = roots.front().field();
  GF eps = *std::min_element(roots.begin(), roots.end(), [&](const GF& a, const GF& b) {
    return host.log(a.code()) < host.log(b.code());
  });
  unsigned k = static_cast<unsigned>(mult_order(eps));
  if (k < 3)
    throw Error(ErrorCode::OrderUnavailable, "s gives eps of order below 3");
  return assemble(f, k, d, s, eps, r);
}

std::array<GF, 4> parse_r(const Field& f, const std::string& text)
{
  std::array<GF, 4> r;
  std::stringstream ss(text);
  std::string item;
  size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 4)
      throw Error(ErrorCode::Parse, "expected four values r1,r2,r3,r4");
    r[i++] = f.wrap(f.parse(item));
  }
  if (i != 4)
    throw Error(ErrorCode::Parse, "expected four values r1,r2,r3,r4");
  return r;
}

std::string GeneratorPair::str() const
{
  std::ostringstream os;
  os << "q=" << field->size() << " k=" << k << " d=" << d << " s=" << s.str() << " r=" << r[0].str() << ","
     << r[1].str() << "," << r[2].str() << "," << r[3].str();
  return os.str();
}

Poly xy_char_poly_closed(const GeneratorPair& pr)
{
  const Field& f = pr.f();
  GF d = pr.d_el();
  const auto& r = pr.r;
  GF c3 = -(d * (r[0] + r[3]));
  GF c2 = r[0] * r[3] - r[1] * r[2] - d * pr.s;
  GF c1 = r[0] * pr.s - r[1] + r[2];
  return Poly(&f, std::vector<code_t>{1, c1.code(), c2.code(), c3.code(), 1});
}

Poly xy_inv_char_poly_closed(const GeneratorPair& pr)
{
  Poly c = xy_char_poly_closed(pr);
  return Poly(&pr.f(), std::vector<code_t>{1, c.coeff(3).code(), c.coeff(2).code(), c.coeff(1).code(), 1});
}

ReducibilityReport reducibility(const GeneratorPair& pr)
{
  const Field& f = pr.f();
  SqrtResult sd = sqrt_in_closure(pr.d_el());
  const Field& e = (pr.eps_in_base() && sd.in_base) ? f : f.closure();
  auto up = [&](const GF& v) { return v.field_ptr() == &e ? v : v.embed(e); };
  GF eps = up(pr.eps), s = up(pr.s), d = up(pr.d_el()), root = up(sd.root);
  GF r1 = up(pr.r[0]), r2 = up(pr.r[1]), r3 = up(pr.r[2]), r4 = up(pr.r[3]);

  ReducibilityReport rep;
  rep.eval_field = &e;
  for (int j : {1, -1}) {
    GF ej = eps.pow(j);
    if (r4 == r1 - ej * r2 + ej.inv() * r3)
      rep.cond_i_hits.push_back(j);
  }
  GF two = e.el(2);
  for (int idx = 0; idx < 2; idx++) {
    int sign = idx == 0 ? 1 : -1;
    GF delta = root * e.el(sign);
    GF val = r1 * r4 - r2 * r3 + delta.inv() * ((s - e.el(1)) * r1 - r2 + r3 - r4) + (two - s) * d;
    rep.delta_values[idx] = val;
    if (val.is_zero())
      rep.cond_ii_hits.push_back(sign);
  }
  rep.specialized = pr.specialized();
  if (rep.specialized) {
    for (int j : {1, -1})
      if (r2 == -(eps.pow(j) * r4))
        rep.special_i_hits.push_back(j);
    for (int sign : {1, -1})
      if (r2 + r4 == e.el(sign) * (two - s) * root)
        rep.special_ii_hits.push_back(sign);
  }
  rep.reducible = !rep.cond_i_hits.empty() || !rep.cond_ii_hits.empty();
  return rep;
}

Matrix y_eigenvector(const GeneratorPair& pr, int j)
{
  if (pr.eps.is_one())
    throw Error(ErrorCode::EpsilonIsOne, "eigenvector formula needs eps != 1");
  const Field& e = pr.eps.field();
  auto up = [&](const GF& v) { return v.field_ptr() == &e ? v : v.embed(e); };
  GF ej = pr.eps.pow(j);
  Matrix u = Matrix::from_rows({{up(pr.r[0]) - ej * up(pr.r[1])},
                                {up(pr.r[2]) - ej * up(pr.r[3])},
                                {ej - e.el(1)},
                                {ej - ej * ej}});
  Matrix y = pr.y.field_ptr() == &e ? pr.y : pr.y.embed(e);
  if (y * u != u.scale(ej))
    throw Error(ErrorCode::InternalMismatch, "eigenvector check failed");
  return u;
}

unsigned field_lower_bound(const GeneratorPair& pr)
{
  GF t = pr.r[0] + pr.r[3];
  return generated_subfield(pr.f(), {pr.s, t * t});
}

std::optional<GF> scalar_power(const GeneratorPair& pr, unsigned h)
{
  return pr.xy().pow(h).scalar_value();
}

bool powers_h8_relations(const GeneratorPair& pr, const GF& rho)
{
  const Field& f = pr.f();
  GF d = pr.d_el(), s = pr.s, r2 = pr.r[1], r4 = pr.r[3], one = f.el(1);
  bool e1 = r4 * r4 + rho * r2 * r2 == -(d * s * (one + rho));
  bool e2 = s * d * r4 * r4 + d * (one - rho) * r2 * r4 == -(s * s) - rho + one;
  bool e3 = -(rho * r2.pow(4)) - f.el(3) * d * s * rho * r2 * r2 - f.el(2) * d * rho * r2 * r4 ==
            rho * s * s - rho + one;
  return e1 && e2 && e3;
}

namespace {

// Constants of degree at most 2 over the prime field, inside E.
struct RowContext {
  const GeneratorPair* pr;
  const Field* e;
  GF s, d, r2, r4;
  std::vector<GF> i_roots;      // square roots of -1
  std::vector<GF> omegas;       // primitive cube roots of unity
  std::vector<GF> sqrt_m7;      // square roots of -7
  std::vector<GF> sqrt_d;       // square roots of d
  std::vector<GF> sqrt_2d;      // square roots of 2d
  GF el(int64_t n) const { return e->el(n); }
};

bool contains(const std::vector<GF>& v, const GF& x)
{
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool row_reducible_i(const RowContext& c)
{
  return !reducibility(*c.pr).special_i_hits.empty();
}

bool row_reducible_ii(const RowContext& c)
{
  return !reducibility(*c.pr).special_ii_hits.empty();
}

bool row_alt5(const RowContext& c)
{
  return c.s == c.el(-1) && c.r4 * c.r4 == c.d && c.r2 == c.r4;
}

bool row_cpsp(const RowContext& c)
{
  return c.s == c.el(1) && c.r4 * c.r4 == -c.d && c.r2 == -c.r4;
}

bool row_c6_a(const RowContext& c)
{
  return c.s == c.el(-1) && c.r2 == c.r4 && contains(c.sqrt_d, c.r4);
}

bool row_c6_b(const RowContext& c)
{
  return c.s == c.el(-1) && c.r2 == c.r4 && contains(c.sqrt_2d, c.r4);
}

bool row_a7(const RowContext& c)
{
  if (c.s != c.el(-1))
    return false;
  GF half = c.el(2).inv();
  for (const GF& i : c.i_roots)
    for (int h = 0; h < 4; h++) {
      if (c.d * c.s != i.pow(2 * h))
        continue;
      for (const GF& w : c.sqrt_m7) {
        GF r4 = c.d * i.pow(h) * (w + c.el(1)) * half;
        GF r2 = -(i.pow(3 * h) * (w - c.el(1)) * half);
        if (c.r4 == r4 && c.r2 == r2)
          return true;
      }
    }
  return false;
}

bool row_psp43(const RowContext& c)
{
  if (!c.s.is_zero())
    return false;
  for (const GF& i : c.i_roots)
    for (int h = 0; h < 4; h++)
      for (const GF& w : c.omegas)
        if (c.r2 == i.pow(-h) * w && c.r4 == c.d * i.pow(h) * w * w)
          return true;
  return false;
}

bool row_psl2(const RowContext& c)
{
  return c.d == c.el(-1) && c.s == c.el(-1) && c.r2 == -c.r4 && c.r4.pow(4) == c.el(-3);
}

struct RowEntry {
  ExceptionalRow row;
  std::function<bool(const RowContext&)> test;
};

const std::vector<RowEntry>& row_table()
{
  static const std::vector<RowEntry> table = {
      {{"reducible-i", "r2 = -eps^(+-1) r4", "reducible", {}, 0, 0, true}, row_reducible_i},
      {{"reducible-ii", "r2 + r4 = +-(2-s) sqrt(d)", "reducible", {}, 0, 0, true}, row_reducible_ii},
      {{"alt5", "s = -1, r4^2 = d, r2 = r4", "Alt(5)", {}, 60, 0, false}, row_alt5},
      {{"cpsp", "s = 1, r4^2 = -d, r2 = -r4", "inside CPSp4", {}, 0, 0, false}, row_cpsp},
      {{"c6-sqrt-d", "s = -1, r2 = r4 = +-sqrt(d)", "C6 normalizer, Alt(5)", {2}, 60, 0, false}, row_c6_a},
      {{"c6-sqrt-2d", "s = -1, r2 = r4 = +-sqrt(2d)", "C6 normalizer, |H| = 576", {2}, 0, 576, false}, row_c6_b},
      {{"a7",
        "s = -1, ds = i^(2h), r2 = -i^(3h)(l sqrt(-7) - 1)/2, r4 = d i^h (l sqrt(-7) + 1)/2",
        "almost simple: Alt(7) or PSL2(7)",
        {2},
        0,
        0,
        false},
       row_a7},
      {{"psp43", "s = 0, r2 = i^(-h) w, r4 = d i^h w^2, w^3 = 1 != w", "almost simple: PSp4(3)", {2, 3}, 0, 0, false},
       row_psp43},
      {{"psl2", "d = -1, s = -1, r2 = -r4, r4^4 = -3", "almost simple: PSL2(q)", {2, 3}, 0, 0, false}, row_psl2},
  };
  return table;
}

}  // namespace

const std::vector<ExceptionalRow>& exceptional_rows()
{
  static const std::vector<ExceptionalRow> rows = [] {
    std::vector<ExceptionalRow> out;
    for (const auto& e : row_table())
      out.push_back(e.row);
    return out;
  }();
  return rows;
}

const ExceptionalRow& exceptional_row(const std::string& id)
{
  for (const auto& r : exceptional_rows())
    if (r.id == id)
      return r;
  throw Error(ErrorCode::Parse, "unknown exceptional row " + id);
}

std::vector<std::string> exceptional_match(const GeneratorPair& pr)
{
  if (!pr.specialized())
    throw Error(ErrorCode::RequiresSpecialization, "exceptional rows need r1 = r3 = 0");
  const Field& f = pr.f();
  const Field& e = f.degree() % 2 == 0 ? f : f.extension(2);
  auto up = [&](const GF& v) { return v.field_ptr() == &e ? v : v.embed(e); };
  RowContext c;
  c.pr = &pr;
  c.e = &e;
  c.s = up(pr.s);
  c.d = up(pr.d_el());
  c.r2 = up(pr.r[1]);
  c.r4 = up(pr.r[3]);
  c.i_roots = sqrts_in_field(e.el(-1));
  for (const GF& w : poly_roots(Poly(&e, std::vector<int64_t>{1, 1, 1})))
    if (!w.is_one())
      c.omegas.push_back(w);
  c.sqrt_m7 = sqrts_in_field(e.el(-7));
  c.sqrt_d = sqrts_in_field(c.d);
  c.sqrt_2d = sqrts_in_field(e.el(2) * c.d);

  std::vector<std::string> out;
  for (const auto& entry : row_table()) {
    const auto& ex = entry.row.excluded_p;
    if (std::find(ex.begin(), ex.end(), f.p()) != ex.end())
      continue;
    if (entry.test(c))
      out.push_back(entry.row.id);
  }
  return out;
}

}  // namespace clgen
