#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clgen/gf.hpp"

namespace clgen {

// Univariate polynomial over a finite field, constant coefficient first.
// The coefficient vector never has trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field* f) : f_(f) {}
  Poly(const Field* f, std::vector<code_t> coeffs);
  Poly(const Field* f, const std::vector<int64_t>& ints);

  static Poly constant(const GF& c);
  static Poly monomial(const Field* f, unsigned deg, code_t coeff = 1);
  // t - c
  static Poly linear_root(const GF& c);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<code_t>& coeffs() const { return c_; }
  GF coeff(unsigned i) const;
  GF lead() const { return coeff(c_.size() - 1); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scale(const GF& c) const;
  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly monic() const;
  GF eval(const GF& x) const;
  Poly embed(const Field& big) const;

  std::string str() const;

 private:
  void trim();
  void same_field(const Poly& o) const;

  const Field* f_ = nullptr;
  std::vector<code_t> c_;
};

Poly poly_gcd(Poly a, Poly b);
Poly powmod(const Poly& base, uint64_t e, const Poly& mod);
// Distinct roots of f in its coefficient field.
std::vector<GF> poly_roots(const Poly& f);
// Degrees of the irreducible factors (with multiplicity ignored), via
// distinct-degree factorization of the squarefree part.
std::vector<unsigned> factor_degrees(const Poly& f);

}  // namespace clgen
