#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clgen/error.hpp"
#include "clgen/genpair.hpp"
#include "clgen/grouporder.hpp"
#include "clgen/matrix.hpp"

namespace clgen {

// Words over named letters: juxtaposition is the product, w^n a power
// (n may be negative), (w) groups, [a,b] = a^-1 b^-1 a b. A leading '-'
// multiplies by the scalar -1. Letters are one ASCII letter followed by
// optional digits ("x", "y1", "T3"), or the two-letter names "xi", "pm",
// "mp" (bound by the caller, typically to scalars).
struct Word {
  enum class Kind { Letter, Product, Power, Commutator, Negate };
  Kind kind = Kind::Product;
  std::string name;
  std::vector<Word> parts;
  int64_t exp = 1;
};

Word parse_word(const std::string& text);
std::string word_str(const Word& w);

// Evaluates w in a group given by mul / inv / identity. Negate is applied
// through neg (only meaningful for matrices).
template <class G, class Ops>
G eval_word(const Word& w, const std::map<std::string, G>& env, const Ops& ops)
{
  switch (w.kind) {
    case Word::Kind::Letter: {
      auto it = env.find(w.name);
      if (it == env.end())
        throw Error(ErrorCode::Parse, "unbound letter " + w.name);
      return it->second;
    }
    case Word::Kind::Product: {
      G acc = ops.identity();
      for (const Word& p : w.parts)
        acc = ops.mul(acc, eval_word(p, env, ops));
      return acc;
    }
    case Word::Kind::Power: {
      G base = eval_word(w.parts[0], env, ops);
      int64_t e = w.exp;
      if (e < 0) {
        base = ops.inv(base);
        e = -e;
      }
      G acc = ops.identity();
      while (e > 0) {
        if (e & 1)
          acc = ops.mul(acc, base);
        e >>= 1;
        if (e > 0)
          base = ops.mul(base, base);
      }
      return acc;
    }
    case Word::Kind::Commutator: {
      G a = eval_word(w.parts[0], env, ops), b = eval_word(w.parts[1], env, ops);
      return ops.mul(ops.mul(ops.inv(a), ops.inv(b)), ops.mul(a, b));
    }
    case Word::Kind::Negate:
      return ops.neg(eval_word(w.parts[0], env, ops));
  }
  throw Error(ErrorCode::InternalMismatch, "bad word node");
}

// Matrix evaluation; env must be nonempty and share one field and size.
Matrix eval_word(const Word& w, const std::map<std::string, Matrix>& env);
Matrix eval_word(const std::string& w, const std::map<std::string, Matrix>& env);

struct Presentation {
  std::string id;    // A5, L27_a, L27_b, L34, A6, A7
  std::string name;  // Alt(5), PSL2(7), ...
  std::vector<std::string> gens;
  std::vector<std::string> relators;
  uint64_t target_order = 0;
};

const std::vector<Presentation>& presentations();
const Presentation& presentation(const std::string& id);

struct PresentationCheck {
  bool relators_hold = false;  // every relator evaluates to a scalar matrix
  std::vector<std::string> failed;
  bool nontrivial = false;     // some image is not scalar
  std::optional<BigInt> projective_order;  // of the subgroup generated by the images
  bool certified = false;      // relators hold, nontrivial, projective order = target
};

// Images in the order of pres.gens. Throws ArityMismatch.
PresentationCheck check_presentation(const Presentation& pres, const std::vector<Matrix>& images,
                                     const OrderOptions& opt = {});
// Generators given as words over env (e.g. {"S": "x", "T": "(y x)^2"}).
PresentationCheck check_assignment(const Presentation& pres, const std::map<std::string, std::string>& assign,
                                   const std::map<std::string, Matrix>& env, const OrderOptions& opt = {});

// A documented assignment of presentation generators to words in x, y.
// For A7, the five generators are g_{i+1} = u^i g1 u^-i.
struct Assignment {
  std::string label;
  std::string pres;
  std::map<std::string, std::string> words;
};
const std::vector<Assignment>& documented_assignments();
std::map<std::string, std::string> a7_words(const std::string& u, const std::string& g1);

struct Identification {
  std::string name;
  std::string method;  // "presentation <id> (<label>)" or "order"
  bool certified = false;
  BigInt order, projective_order;
  BigInt index = 1;  // index of the certified subgroup in the projective image
};

// Tries the documented assignments, then falls back to an order lookup.
std::optional<Identification> identify_quotient(const Matrix& x, const Matrix& y, const OrderOptions& opt = {});
std::optional<Identification> identify_quotient(const GeneratorPair& pr, const OrderOptions& opt = {});
// Same, reusing an already computed report for <x, y>.
std::optional<Identification> identify_quotient(const Matrix& x, const Matrix& y, const GroupReport& h,
                                                const OrderOptions& opt = {});

// ---- case tables for the (2,4) analysis of PSU4(3) over F9 ----

struct PsuClaimResult {
  std::string kind;
  bool holds = false;
  std::string evidence;
};

struct PsuTupleResult {
  std::string label;   // case label
  std::string tuple;   // parameters as printed
  int sign = 1;
  Matrix x, y;
  std::vector<PsuClaimResult> claims;
  bool holds() const;
};

// The embedded case data (JSON text).
const std::string& psu_case_data();
// Runs every claim of every tuple (xi is a root of t^2 - t - 1 in F9; both
// roots may be requested).
std::vector<PsuTupleResult> run_psu_cases(const std::string& label_prefix = "", bool other_root = false,
                                          const OrderOptions& opt = {});

}  // namespace clgen
