#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "clgen/cli.hpp"
#include "clgen/genpair.hpp"
#include "clgen/grouporder.hpp"

namespace clgen {

struct ClaimResult {
  std::string id;
  bool pass = false;
  // Recorded outcomes (e.g. the d = -1 side of a d = 1 claim) do not count
  // towards pass/fail.
  bool asserted = true;
  nlohmann::json evidence;
};

struct VerifyReport {
  std::string target;
  std::vector<ClaimResult> claims;
  bool pass() const;
};

struct VerifyOptions {
  unsigned threads = 0;
  OrderOptions order;
};

// nr-i, nr-ii, nr-iii, nr-iv, sl3-su9-not23, sl-not24, psu-not24, sl4, sp4,
// su4, su4-2, lemma26, table4, table5, tuples-48-54.
const std::vector<std::string>& verify_targets();
VerifyReport verify(const std::string& target, const VerifyOptions& opt = {});
nlohmann::json to_json(const VerifyReport& r);

// ---- hypotheses of the generation criteria (pairs with r1 = r3 = 0) ----

// SL4(q): r2 = 0, r4 != 0, F_q = F_p[s, r4^2], r4 != +-(s-2) sqrt(d).
bool sl4_hypotheses(const GF& s, int d, const GF& r4);
// Sp4(q): d = -1, r2 = -r4 != 0, p odd, k != p, F_q = F_p[s, r4^2], and
// r4^4 != -3 when k = 3 and p != 3.
bool sp4_hypotheses(unsigned k, const GF& s, const GF& r4);

// SU4(q^2), over F_{q^2} with r2 = d r4^q.
struct UnitaryHypotheses {
  bool q_not_3 = false;
  bool field = false;     // F_{q^2} = F_p[r4^2]
  bool cond_i = false;    // r4^(q-1) != -d eps^(+-1)
  bool cond_ii = false;   // r4 + d r4^q != +-sqrt(d)(2-s)
  bool cond_iii = false;  // the Alt(7) exclusions (q = p = 3,5,6 mod 7, s = -1)
  bool cond_iv = false;   // the PSp4(3) exclusions (q = p = 5 mod 6, s = 0)
  bool all() const { return q_not_3 && field && cond_i && cond_ii && cond_iii && cond_iv; }
};
UnitaryHypotheses unitary_hypotheses(const GF& s, int d, const GF& r4);

// Classical q for a unitary pair over F_{q^2}, and the admissible k
// (k >= 3 with k | q-1, k | q+1, or k in {p, 2p}).
uint64_t unitary_q(const Field& fq2);
std::vector<unsigned> classical_k(uint32_t p, uint64_t q);
// The s values for k (in the pair's field), one per class eps^(+-1).
std::vector<GF> unitary_s_values(const Field& fq2, unsigned k);

// ---- (2,3) tuples over F9 for the PSU4(9) argument ----
// Tuples (r1..r4) in F9^4 with s = -1 and the given d meeting the
// conjugacy, irreducibility and non-prime-field conditions, and fixing a
// hermitian form (the pair lies in SU4(9)).
std::vector<std::array<GF, 4>> psu9_tuples_enumerated(int d);
// The listed tuples (+- and the automorphism xi -> xi^3 applied), as sets.
std::vector<std::array<GF, 4>> psu9_tuples_listed(int d, char family);

// ---- table reproduction ----
struct Table5Row {
  uint64_t q = 0;
  int d = 1;
  unsigned k = 0;
  std::string s;                  // as printed: 0, -1, 1, 2, -2, omega, omega^2
  std::vector<unsigned> b;        // computed, in terms of the reference generator
  std::vector<unsigned> expected;
  bool match() const { return b == expected; }
};
struct Table5 {
  // How the reference generator alpha is expressed in the field's canonical
  // generator g (alpha = g^e), per q.
  std::vector<std::string> mapping;
  std::vector<Table5Row> rows;
};
Table5 reproduce_table5();

struct Table4Witness {
  std::string row;
  std::string expectation;
  bool found = false;
  GeneratorPair pair;
  Classification cls;
  bool pass = false;
  nlohmann::json evidence;
};
std::vector<Table4Witness> reproduce_table4(const VerifyOptions& opt = {});

}  // namespace clgen
