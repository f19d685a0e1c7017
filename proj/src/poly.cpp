#include "clgen/poly.hpp"

#include <algorithm>
#include <sstream>

namespace clgen {

Poly::Poly(const Field* f, std::vector<code_t> coeffs) : f_(f), c_(std::move(coeffs))
{
  trim();
}

Poly::Poly(const Field* f, const std::vector<int64_t>& ints) : f_(f)
{
  for (int64_t v : ints)
    c_.push_back(f->from_int(v));
  trim();
}

Poly Poly::constant(const GF& c)
{
  return Poly(c.field_ptr(), std::vector<code_t>{c.code()});
}

Poly Poly::monomial(const Field* f, unsigned deg, code_t coeff)
{
  std::vector<code_t> c(deg + 1, 0);
  c[deg] = coeff;
  return Poly(f, c);
}

Poly Poly::linear_root(const GF& c)
{
  const Field* f = c.field_ptr();
  return Poly(f, std::vector<code_t>{f->neg(c.code()), 1});
}

GF Poly::coeff(unsigned i) const
{
  return GF(f_, i < c_.size() ? c_[i] : 0);
}

void Poly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

void Poly::same_field(const Poly& o) const
{
  if (f_ != o.f_)
    throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const
{
  same_field(o);
  std::vector<code_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); i++) {
    code_t x = i < c_.size() ? c_[i] : 0;
    code_t y = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = f_->add(x, y);
  }
  return Poly(f_, r);
}

Poly Poly::operator-() const
{
  std::vector<code_t> r(c_);
  for (auto& v : r)
    v = f_->neg(v);
  return Poly(f_, r);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const
{
  same_field(o);
  if (is_zero() || o.is_zero())
    return Poly(f_);
  std::vector<code_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); i++) {
    if (c_[i] == 0)
      continue;
    for (size_t j = 0; j < o.c_.size(); j++)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return Poly(f_, r);
}

Poly Poly::scale(const GF& c) const
{
  std::vector<code_t> r(c_);
  for (auto& v : r)
    v = f_->mul(v, c.code());
  return Poly(f_, r);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const
{
  same_field(d);
  if (d.is_zero())
    throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<code_t> rem(c_);
  int dd = d.degree();
  if (degree() < dd)
    return {Poly(f_), *this};
  std::vector<code_t> quot(degree() - dd + 1, 0);
  code_t inv_lead = f_->inv(d.c_.back());
  for (int k = degree(); k >= dd; k--) {
    code_t c = rem[k];
    if (c == 0)
      continue;
    code_t m = f_->mul(c, inv_lead);
    quot[k - dd] = m;
    for (int i = 0; i <= dd; i++)
      rem[k - dd + i] = f_->sub(rem[k - dd + i], f_->mul(m, d.c_[i]));
  }
  rem.resize(dd);
  return {Poly(f_, quot), Poly(f_, rem)};
}

Poly Poly::monic() const
{
  if (is_zero())
    return *this;
  return scale(lead().inv());
}

GF Poly::eval(const GF& x) const
{
  if (x.field_ptr() != f_)
    throw Error(ErrorCode::FieldMismatch, "evaluation point in another field");
  code_t acc = 0;
  for (size_t k = c_.size(); k-- > 0;)
    acc = f_->add(f_->mul(acc, x.code()), c_[k]);
  return GF(f_, acc);
}

Poly Poly::embed(const Field& big) const
{
  std::vector<code_t> r;
  for (code_t v : c_)
    r.push_back(f_->embed(v, big));
  return Poly(&big, r);
}

std::string Poly::str() const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    std::string coef = f_->str(c_[k]);
    if (k == 0)
      os << coef;
    else {
      if (c_[k] != 1)
        os << coef << "*";
      os << "t";
      if (k > 1)
        os << "^" << k;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b)
{
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, uint64_t e, const Poly& mod)
{
  const Field* f = mod.field_ptr();
  Poly r = Poly::constant(f->el(1)) % mod;
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1)
      r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

namespace {

// Splits a squarefree product of distinct linear factors.
void split_linear(const Poly& g, std::vector<GF>& out)
{
  const Field* f = g.field_ptr();
  if (g.degree() <= 0)
    return;
  if (g.degree() == 1) {
    Poly m = g.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  Poly t = Poly::monomial(f, 1);
  unsigned a = f->degree();
  for (code_t seed = 0; seed < f->size(); seed++) {
    Poly h(f);
    if (f->p() == 2) {
      // Trace of seed*t over F_2 splits the roots by their trace value.
      Poly u = (t.scale(f->wrap(seed == 0 ? 1 : seed)) + Poly::constant(f->el(0))) % g;
      Poly acc = u;
      Poly cur = u;
      for (unsigned i = 1; i < a; i++) {
        cur = (cur * cur) % g;
        acc = acc + cur;
      }
      if (a == 1) {
        // GF(2): roots are 0 and 1 only.
        h = poly_gcd(g, t);
      } else {
        h = poly_gcd(g, acc);
      }
    } else {
      Poly shifted = t + Poly::constant(f->wrap(seed));
      Poly w = powmod(shifted, (uint64_t(f->size()) - 1) / 2, g) - Poly::constant(f->el(1));
      h = poly_gcd(g, w);
    }
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(g / h, out);
      return;
    }
  }
  throw Error(ErrorCode::InternalMismatch, "root splitting failed");
}

}  // namespace

std::vector<GF> poly_roots(const Poly& f)
{
  if (f.is_zero())
    throw Error(ErrorCode::InternalMismatch, "roots of the zero polynomial");
  const Field* fld = f.field_ptr();
  if (f.degree() == 0)
    return {};
  Poly t = Poly::monomial(fld, 1);
  Poly tq = powmod(t, fld->size(), f);
  Poly g = poly_gcd(f, tq - t);
  std::vector<GF> out;
  split_linear(g, out);
  std::sort(out.begin(), out.end(), [](const GF& x, const GF& y) { return x.code() < y.code(); });
  return out;
}

std::vector<unsigned> factor_degrees(const Poly& f)
{
  const Field* fld = f.field_ptr();
  std::vector<unsigned> degs;
  Poly rest = f.monic();
  Poly t = Poly::monomial(fld, 1);
  Poly frob = t;
  for (unsigned d = 1; rest.degree() > 0; d++) {
    frob = powmod(frob, fld->size(), rest);
    Poly h = poly_gcd(rest, frob - t);
    if (h.degree() > 0) {
      degs.push_back(d);
      for (Poly g = h; g.degree() > 0; g = poly_gcd(rest, h))
        rest = rest / g;
      frob = frob % rest;
    }
  }
  return degs;
}

}  // namespace clgen
