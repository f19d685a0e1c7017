#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clgen/gf.hpp"
#include "clgen/matrix.hpp"
#include "clgen/poly.hpp"

namespace clgen {

// The pair x = [[0,0,1,0],[0,0,0,1],[d,0,0,0],[0,d,0,0]] and
// y = [[1,0,r1,r2],[0,1,r3,r4],[0,0,0,-1],[0,0,1,s]] with s = eps + 1/eps.
// eps lives in the field itself or in its quadratic extension (k | q+1);
// s always lies in the field.
struct GeneratorPair {
  const Field* field = nullptr;
  unsigned k = 0;
  int d = 1;
  GF s;
  GF eps;
  std::array<GF, 4> r;
  Matrix x, y;

  const Field& f() const { return *field; }
  bool eps_in_base() const { return eps.field_ptr() == field; }
  // r1 = r3 = 0.
  bool specialized() const { return r[0].is_zero() && r[2].is_zero(); }
  GF d_el() const { return field->el(d); }
  Matrix xy() const { return x * y; }
  std::string str() const;
};

Matrix pair_x(const Field& f, int d);
Matrix pair_y(const GF& s, const std::array<GF, 4>& r);

// eps for the order parameter k: 1 for k = p (or k = 4, p = 2), -1 for
// k = 2p, else the least-exponent primitive k-th root of unity of F, or of
// its quadratic extension when k | q+1. Throws OrderUnavailable otherwise.
GF epsilon_for(const Field& f, unsigned k);
// Order parameters k >= 3 for which a pair exists over f.
std::vector<unsigned> admissible_k(const Field& f, unsigned max_k = 0);

// Every s = eps + 1/eps in f over the primitive k-th roots of unity eps in f
// or its quadratic extension (one value for k in {p, 2p}), sorted by code.
std::vector<GF> s_values(const Field& f, unsigned k);

GeneratorPair make_pair(const Field& f, unsigned k, int d, const std::array<GF, 4>& r);
// Same, with k and eps recovered from s (s = 2 means eps = 1, k = p or 4).
GeneratorPair make_pair_s(const Field& f, const GF& s, int d, const std::array<GF, 4>& r);
std::array<GF, 4> parse_r(const Field& f, const std::string& text);

// t^4 - d(r1+r4)t^3 + (r1r4 - r2r3 - ds)t^2 + (r1s - r2 + r3)t + 1.
Poly xy_char_poly_closed(const GeneratorPair& pr);
// Same for (xy)^-1: the t^3 and t coefficients swap.
Poly xy_inv_char_poly_closed(const GeneratorPair& pr);

struct ReducibilityReport {
  // Field where the conditions were evaluated (F or its quadratic extension).
  const Field* eval_field = nullptr;
  // j in {+1, -1} with r4 = r1 - eps^j r2 + eps^-j r3.
  std::vector<int> cond_i_hits;
  // Signs e with delta = e*sqrt(d) and Delta(delta) = 0.
  std::vector<int> cond_ii_hits;
  std::array<GF, 2> delta_values;
  // The r1 = r3 = 0 forms: r2 = -eps^j r4, and r2 + r4 = e(2-s)sqrt(d).
  bool specialized = false;
  std::vector<int> special_i_hits;
  std::vector<int> special_ii_hits;
  bool reducible = false;
};

ReducibilityReport reducibility(const GeneratorPair& pr);

// u = (r1 - e r2, r3 - e r4, e - 1, -e^2 + e) with e = eps^j; y u = e u is
// checked before returning. Throws EpsilonIsOne for eps = 1.
Matrix y_eigenvector(const GeneratorPair& pr, int j);

// Degree over F_p of F_p[s, (r1 + r4)^2].
unsigned field_lower_bound(const GeneratorPair& pr);

// rho if (xy)^h = rho I.
std::optional<GF> scalar_power(const GeneratorPair& pr, unsigned h);

// The three relations forced by (xy)^8 = rho I (r1 = r3 = 0).
bool powers_h8_relations(const GeneratorPair& pr, const GF& rho);

// One row of the exceptional-parameter ledger. The predicate is evaluated in
// the smallest field containing F and F_{p^2}, where i, omega, sqrt(-7),
// sqrt(d) and sqrt(2d) all live.
struct ExceptionalRow {
  std::string id;
  std::string condition;
  std::string prediction;
  std::vector<uint32_t> excluded_p;
  // Predicted projective order (0 if only a containment is predicted).
  uint64_t projective_order = 0;
  // Predicted order of H itself (0 if none).
  uint64_t linear_order = 0;
  bool reducible = false;
};

const std::vector<ExceptionalRow>& exceptional_rows();
// Ids of every matching row. Throws RequiresSpecialization unless r1 = r3 = 0.
std::vector<std::string> exceptional_match(const GeneratorPair& pr);
const ExceptionalRow& exceptional_row(const std::string& id);

}  // namespace clgen
