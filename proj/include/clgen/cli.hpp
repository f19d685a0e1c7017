#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "clgen/genpair.hpp"
#include "clgen/grouporder.hpp"

namespace clgen {

enum class ClassKind { Reducible, SubfieldDefined, FixesForm, Exceptional, FullGroup, Undetermined };
std::string class_kind_name(ClassKind k);

struct Classification {
  ClassKind kind = ClassKind::Undetermined;
  // Form kind, exceptional row / quotient name, or full group name.
  std::string detail;
  // Sub-reports of every stage that ran, in pipeline order.
  nlohmann::json evidence;
};

// Pipeline: reducibility -> minimal field -> invariant forms -> exceptional
// rows -> quotient identification -> order verdict. The first conclusive
// stage wins, except that a fixed form is superseded when an exceptional
// row or a certified small quotient explains the same pair.
Classification classify(const GeneratorPair& pr, const OrderOptions& opt = {});

// Which classical group the pair lies in: Sp4 (skew form, multipliers 1),
// SU4 (hermitian form, multipliers 1), else SL4.
Classical ambient_group(const GeneratorPair& pr);
// "SL4(7)", "Sp4(5)", "SU4(25)".
std::string ambient_name(Classical c, const Field& f);

enum class Constraint { R2Zero, R2MinusR4, R2Unitary, All };
Constraint parse_constraint(const std::string& s);
std::string constraint_name(Constraint c);

// The parameter tuples of a sweep, in deterministic order. R2Zero,
// R2MinusR4, R2Unitary iterate r4 (r1 = r3 = 0); All iterates F^4 and is
// limited to fields of size at most 9. R2Unitary needs a field of even degree.
std::vector<std::array<GF, 4>> sweep_tuples(const Field& f, int d, Constraint c);

struct SweepRecord {
  std::array<GF, 4> r;
  bool constructed = false;  // false when make_pair rejected the tuple
  std::string error;
  GeneratorPair pair;
  Classification cls;
  double seconds = 0;
};

struct SweepOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  OrderOptions order;
};

std::vector<SweepRecord> sweep(const Field& f, const GF& s, int d, Constraint c, const SweepOptions& opt = {});
std::vector<SweepRecord> sweep(const Field& f, unsigned k, int d, Constraint c, const SweepOptions& opt = {});

nlohmann::json to_json(const GeneratorPair& pr);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const SweepRecord& r);

unsigned thread_count(unsigned requested);

// Runs fn(i) for i in [0, n) on a pool of threads; fn must only write to
// per-index state.
template <class Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn)
{
  threads = thread_count(threads);
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; i++)
      fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads && t < n; t++)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool)
    th.join();
  if (failure)
    std::rethrow_exception(failure);
}

}  // namespace clgen
