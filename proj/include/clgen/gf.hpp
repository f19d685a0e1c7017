#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clgen/error.hpp"

namespace clgen {

// An element of GF(p^a) is stored as the integer sum c_i p^i of its
// coefficients in the polynomial basis 1, t, ..., t^(a-1).
using code_t = uint32_t;

constexpr unsigned kMaxDegree = 12;
constexpr uint64_t kMaxFieldSize = uint64_t(1) << 24;

class GF;

// Immutable finite field with log/antilog and Zech tables. Instances live in
// a process-wide registry and are shared by pointer; never construct directly.
class Field {
 public:
  Field(uint32_t p, std::vector<uint32_t> modulus);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  uint32_t p() const { return p_; }
  unsigned degree() const { return a_; }
  uint32_t size() const { return q_; }
  // Monic modulus, constant term first (length a + 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  code_t add(code_t x, code_t y) const;
  code_t sub(code_t x, code_t y) const { return add(x, neg(y)); }
  code_t neg(code_t x) const;
  code_t mul(code_t x, code_t y) const;
  code_t inv(code_t x) const;
  code_t div(code_t x, code_t y) const { return mul(x, inv(y)); }
  code_t pow(code_t x, int64_t e) const;
  code_t from_int(int64_t n) const;

  // Canonical generator of the multiplicative group (the class of t).
  code_t gen() const { return exp_[q_ > 2 ? 1 % (q_ - 1) : 0]; }
  // Discrete logarithm to base gen(); x must be nonzero.
  uint32_t log(code_t x) const;
  code_t exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }

  code_t frobenius(code_t x, int64_t i) const;
  // Degree over F_p of the subfield generated by x.
  unsigned min_degree(code_t x) const;
  bool in_prime_field(code_t x) const { return x < p_; }

  std::vector<uint32_t> coeffs(code_t x) const;
  code_t from_coeffs(const std::vector<uint32_t>& c) const;

  std::string str(code_t x) const;
  code_t parse(const std::string& s) const;

  GF el(int64_t n) const;
  GF wrap(code_t x) const;
  GF generator() const;

  // Extensions built with canonical moduli; sizes must stay within caps.
  const Field& extension(unsigned m) const;
  const Field& closure() const { return extension(2); }
  bool embeds_in(const Field& big) const;
  code_t embed(code_t x, const Field& big) const;
  // Preimage of an element of a larger field, if it lies in this one.
  std::optional<code_t> restrict_from(code_t z, const Field& big) const;

  std::string spec_string() const;

 private:
  uint64_t embed_multiplier(const Field& big) const;

  uint32_t p_;
  unsigned a_;
  uint32_t q_;
  std::vector<uint32_t> modulus_;
  std::vector<code_t> exp_;
  std::vector<uint32_t> log_;
  std::vector<uint32_t> zech_;
  std::vector<uint64_t> ppow_;
  mutable std::mutex cache_mutex_;
  mutable std::map<const Field*, uint64_t> embed_cache_;
};

// Value type pairing a code with its field; arithmetic checks field identity.
class GF {
 public:
  GF() = default;
  GF(const Field* f, code_t v) : f_(f), v_(v) {}

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  code_t code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  GF operator+(const GF& o) const;
  GF operator-(const GF& o) const;
  GF operator*(const GF& o) const;
  GF operator/(const GF& o) const;
  GF operator-() const { return GF(f_, f_->neg(v_)); }
  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  bool operator==(const GF& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const GF& o) const { return !(*this == o); }

  GF pow(int64_t e) const { return GF(f_, f_->pow(v_, e)); }
  GF inv() const { return GF(f_, f_->inv(v_)); }
  GF frob(int64_t i) const { return GF(f_, f_->frobenius(v_, i)); }
  GF embed(const Field& big) const { return GF(&big, f_->embed(v_, big)); }
  std::string str() const { return f_->str(v_); }

 private:
  void same_field(const GF& o) const;

  const Field* f_ = nullptr;
  code_t v_ = 0;
};

// Field with the canonical modulus (Conway polynomial).
const Field& field_create(uint32_t p, unsigned a);
// Field with an explicit monic primitive modulus (constant term first).
const Field& field_with_modulus(uint32_t p, const std::vector<uint32_t>& modulus);
// "p^a", "q" or "p^a:c0,...,ca".
const Field& parse_field(const std::string& text);
// Canonical modulus for GF(p^a), computed once and cached.
std::vector<uint32_t> canonical_modulus(uint32_t p, unsigned a);

GF root_of_unity(const Field& f, unsigned k);
unsigned generated_subfield(const Field& f, const std::vector<GF>& elems);
uint64_t count_defective(const Field& f);
// Upper bound on count_defective for a > 1.
uint64_t defective_bound(uint32_t p, unsigned a);

struct SqrtResult {
  GF root;
  bool in_base;
};
SqrtResult sqrt_in_closure(const GF& x);
// All square roots of x in its own field.
std::vector<GF> sqrts_in_field(const GF& x);

}  // namespace clgen
