#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clgen/matrix.hpp"
#include "clgen/poly.hpp"

namespace clgen {

// Invariant factors d_1 | d_2 | ... | d_r of tI - M (units dropped), monic.
struct SimilarityInvariants {
  std::vector<Poly> factors;

  std::vector<int> degrees() const;
  Poly product() const;
};

Poly char_poly(const Matrix& m);
Poly min_poly(const Matrix& m);
SimilarityInvariants similarity_invariants(const Matrix& m);
// Evaluates the polynomial at a square matrix.
Matrix poly_at(const Poly& f, const Matrix& m);

// Sum of min(deg d_i, deg d_j) over invariant-factor pairs, cross-checked
// against the nullity of Z -> MZ - ZM.
unsigned centralizer_dim(const Matrix& m);
unsigned centralizer_dim_by_invariants(const Matrix& m);
unsigned centralizer_dim_by_nullity(const Matrix& m);

// Dimension of the span of all words in gens (the enveloping algebra).
unsigned enveloping_dim(const std::vector<Matrix>& gens);

// Smallest subspace containing the rows of `start` and stable under gens
// (acting on column vectors); returned as an RREF row basis.
Matrix spin(const std::vector<Matrix>& gens, const Matrix& start);

// Bases of the maximal common eigenspaces (rational over the matrices' field),
// one RREF row basis per tuple of eigenvalues.
std::vector<Matrix> common_eigenspaces(const std::vector<Matrix>& gens);

// Number of dim-dimensional subspaces of F_Q^n, saturating at UINT64_MAX.
uint64_t subspace_count(uint64_t Q, unsigned n, unsigned dim);

constexpr uint64_t kSubspaceEnumerationLimit = 10000000;

// A common invariant subspace of the requested dimension over the field of
// the generators (rows form a basis), or nullopt when none exists. Throws
// TooLarge when absence cannot be certified within the enumeration limit.
std::optional<Matrix> invariant_subspace(const std::vector<Matrix>& gens, unsigned dim,
                                         uint64_t limit = kSubspaceEnumerationLimit);

// Fixed-space dimension of m -> g m g^T on symmetric matrices (or of the
// dual action), intersected over gens.
unsigned sym_fixed_dim(const std::vector<Matrix>& gens, bool dual);
Matrix sym_action(const Matrix& g);

// Matrix of m -> g m g^{-1} on Mat_n with respect to the basis E_ij.
Matrix conj_action(const Matrix& g);

// Action of a 2x2 matrix of determinant 1 on binary cubics, basis
// t1^3, t1^2 t2, t1 t2^2, t2^3, with t_j -> sum_i g_ij t_i.
Matrix cubic_rep(const Matrix& g);

// The conjugator Q(r) taking the cubic images of x2, y2(r) to the
// generator shapes with d = -1, s = -1 when r^4 = -3.
Matrix cubic_conjugator(const GF& r);
// The 2x2 matrices x2 = [[0,-1],[1,0]] and y2(r) = [[-1/2, 3/(2r)], [-r/2, -1/2]].
Matrix cubic_x2(const Field* f);
Matrix cubic_y2(const GF& r);

}  // namespace clgen
