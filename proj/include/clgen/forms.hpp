#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clgen/genpair.hpp"
#include "clgen/matrix.hpp"

namespace clgen {

enum class FormKind { Symmetric, Skew, Hermitian, Bilinear };

std::string form_kind_name(FormKind k);

// g^T J g^sigma = multiplier * J for every generator, with sigma = x -> x^(p^sigma_power).
struct InvariantForm {
  Matrix J;
  FormKind kind = FormKind::Bilinear;
  std::vector<GF> multipliers;
  unsigned sigma_power = 0;
};

struct FormSolution {
  std::vector<GF> multipliers;
  unsigned sigma_power = 0;
  // Basis of the full solution space.
  std::vector<Matrix> basis;
  // Nondegenerate representatives, at most one per kind.
  std::vector<InvariantForm> forms;
  // True when the space is nonzero but contains no nondegenerate element
  // among the tried combinations.
  bool only_degenerate = false;
};

// Multipliers in {+1,-1}^n (default) or (F*)^n (audit mode).
std::vector<std::vector<GF>> sign_multipliers(const Field& f, size_t n);
std::vector<std::vector<GF>> all_multipliers(const Field& f, size_t n);

// Solution spaces with at least one nonzero solution, one per multiplier tuple.
std::vector<FormSolution> solve_forms(const std::vector<Matrix>& gens, unsigned sigma_power,
                                      const std::vector<std::vector<GF>>& multiplier_scan);

// Every nondegenerate form of the pair: bilinear (sigma = id) and, over
// fields of even degree, hermitian (sigma = x -> x^sqrt(Q)).
std::vector<InvariantForm> pair_forms(const GeneratorPair& pr, bool full_scan = false);

// Checks g^T J g^sigma = m J for each generator and the kind of J.
bool form_is_valid(const InvariantForm& form, const std::vector<Matrix>& gens);

struct ClassicFlags {
  bool co_csp = false;  // r2 = +-d r4
  bool cu = false;      // r2 = +-d r4^sigma and s^sigma = s
};
ClassicFlags classic_necessary(const GeneratorPair& pr);

struct ScottReport {
  unsigned d_x = 0, d_y = 0, d_xy = 0, sum = 0;
  bool rigid = false;
  unsigned ds_x = 0, ds_y = 0, ds_xy = 0, ds_h = 0, ds_h_dual = 0;
};
ScottReport scott(const Matrix& x, const Matrix& y);
ScottReport scott(const GeneratorPair& pr);

// d_S^x + d_S^y = 10 and xy conjugate to its inverse.
bool orthogonal_trap(const GeneratorPair& pr);

// tr(g) tr(g^-1), cross-checked against the trace of the conjugation action.
GF conj_action_trace(const Matrix& g);

struct FixformCheck {
  bool hypothesis_met = false;  // deg mu_g > 2a, or = 2a with nonzero middle coefficient
  unsigned ds = 0;
  bool holds = false;           // ds >= a (meaningful when the hypothesis is met)
};
FixformCheck fixform_bound_check(const Matrix& g, const InvariantForm& form, unsigned a);

// The explicit form for r1 = r3 = 0, r2 = l r4 (l = +-1); x^T J x = l d J,
// y^T J y = J. Throws HypothesisNotMet if r2 != +-r4 or (l = 1, s = -2).
Matrix explicit_form(const GeneratorPair& pr);
// ((s-2)^2 - 4 d r4^2)^3 / (s+2)^2 for l = 1, (s-2)^4 for l = -1.
GF explicit_form_det(const GeneratorPair& pr);

}  // namespace clgen
