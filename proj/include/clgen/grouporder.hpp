#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clgen/genpair.hpp"
#include "clgen/matrix.hpp"

namespace clgen {

using BigInt = boost::multiprecision::cpp_int;

struct OrderOptions {
  // Cap on the number of vectors of F^n (the permutation domain).
  uint64_t max_points = 1000000;
  // Order of a group known to contain the generated group. Reaching it ends
  // the computation without the deterministic completion pass. Unset means
  // |SL_n(Q)| when every generator has determinant 1, else |GL_n(Q)|.
  std::optional<BigInt> known_bound;
  uint64_t seed = 1;
  // Consecutive sifts without progress before the deterministic pass.
  unsigned stall = 40;
};

// Base and strong generating set for a matrix group acting on the vectors of
// F^n, with base e_1, ..., e_n.
class BSGS {
 public:
  explicit BSGS(const std::vector<Matrix>& gens, const OrderOptions& opt = {});

  const Field& field() const { return *f_; }
  size_t dim() const { return n_; }
  const BigInt& order() const { return order_; }
  // True if the order was certified by the deterministic pass (otherwise it
  // was certified by reaching known_bound).
  bool completed() const { return completed_; }
  bool contains(const Matrix& g) const;
  const std::vector<Matrix>& strong_generators() const { return gens_; }
  std::vector<uint64_t> orbit_sizes() const;

 private:
  struct Level {
    uint64_t point = 0;
    std::vector<uint32_t> gens;
    std::vector<uint64_t> orbit;
    // Position of each point in orbit, -1 if absent.
    std::vector<int32_t> pos;
    // uinv[i] maps orbit[i] back to the base point.
    std::vector<Matrix> uinv;
  };

  uint64_t apply(const Matrix& g, uint64_t pt) const;
  void extend_orbit(size_t level, size_t first_new_gen);
  // Sifts g from the given level; returns the residue and the level where it
  // stopped (levels_.size() when g passed every level).
  std::pair<Matrix, size_t> sift(Matrix g, size_t from) const;
  // Adds a residue that fixes the base points before `level`.
  void add_generator(const Matrix& g, size_t level);
  void random_phase(const OrderOptions& opt);
  void complete();
  void recompute_order();

  const Field* f_ = nullptr;
  size_t n_ = 0;
  uint64_t q_ = 0;
  uint64_t npoints_ = 0;
  std::vector<Matrix> gens_, inv_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
  std::optional<BigInt> bound_;
  bool completed_ = false;
};

enum class Classical { SL4, Sp4, SU4 };
std::string classical_name(Classical c);
Classical parse_classical(const std::string& s);

// Orders of SL4(q), Sp4(q) and SU4(q^2) (q is the size of the fixed field).
BigInt classical_order(Classical c, uint64_t q);

// Scalars lambda with lambda I in the group; candidates are the 4th roots of
// unity when every generator has determinant 1, otherwise all of F*.
std::vector<GF> scalars_in(const BSGS& g, const std::vector<Matrix>& gens);

struct GroupReport {
  BigInt order;
  uint64_t scalar_order = 1;
  BigInt projective_order;
  std::vector<GF> scalars;
  bool completed = false;
};
GroupReport group_report(const std::vector<Matrix>& gens, const OrderOptions& opt = {});

// (order, projective order) of an invertible matrix of size at most 4.
std::pair<uint64_t, uint64_t> element_order(const Matrix& g);

enum class Verdict { Full, Proper, NotContained, TooLarge };
std::string verdict_name(Verdict v);

struct VerdictReport {
  Verdict verdict = Verdict::TooLarge;
  BigInt order;  // 0 when the generators are not contained in the target
  BigInt target_order;
  std::string detail;
};

// Compares <x, y> with SL4(q), Sp4(q) (pair over F_q) or SU4(q^2) (pair over
// F_{q^2}). Containment in the target is checked first: determinant 1, plus
// a fixed skew or hermitian form for Sp4 and SU4.
VerdictReport verdict(const GeneratorPair& pr, Classical target, const OrderOptions& opt = {});

}  // namespace clgen
