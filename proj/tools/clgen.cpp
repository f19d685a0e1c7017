// clgen: command-line front end for the (2,k)-generating pair library.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "clgen/cli.hpp"
#include "clgen/forms.hpp"
#include "clgen/presentations.hpp"
#include "clgen/verify.hpp"

using namespace clgen;
using nlohmann::json;

namespace {

struct PairArgs {
  std::string field;
  unsigned k = 0;
  int d = 1;
  std::string r = "0,0,0,0";
  std::string s;
};

void add_pair_options(CLI::App* app, PairArgs& a)
{
  app->add_option("--field", a.field, "field as p^a or p^a:c0,c1,...,ca (monic modulus, constant first)")->required();
  app->add_option("--k", a.k, "order of y (k >= 3)");
  app->add_option("--d", a.d, "d = 1 or -1")->check(CLI::IsMember({1, -1}));
  app->add_option("--r", a.r, "r1,r2,r3,r4 (integers, g^e or -g^e)");
  app->add_option("--s", a.s, "override s = eps + 1/eps");
}

GeneratorPair build_pair(const PairArgs& a)
{
  const Field& f = parse_field(a.field);
  std::array<GF, 4> r = parse_r(f, a.r);
  if (!a.s.empty())
    return make_pair_s(f, f.wrap(f.parse(a.s)), a.d, r);
  if (a.k == 0)
    throw Error(ErrorCode::Parse, "give --k or --s");
  return make_pair(f, a.k, a.d, r);
}

OrderOptions order_options(uint64_t max_points)
{
  OrderOptions o;
  o.max_points = max_points;
  return o;
}

void emit(const json& j, bool as_json, const std::string& human)
{
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string join(const std::vector<unsigned>& v)
{
  std::string s;
  for (unsigned x : v)
    s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"(2,k)-generating pairs of 4-dimensional classical groups"};
  app.require_subcommand(1);
  bool as_json = false;
  uint64_t max_points = 1000000;
  unsigned threads = 0;
  app.add_flag("--json", as_json, "print JSON lines");
  app.add_option("--max-points", max_points, "cap on |F|^4 for order computations");
  app.add_option("--threads", threads, "worker threads (0: all cores)");

  PairArgs pa;
  auto* c_classify = app.add_subcommand("classify", "classify the group generated by one pair");
  add_pair_options(c_classify, pa);
  auto* c_order = app.add_subcommand("order", "order of <x, y> and the verdict against a classical group");
  add_pair_options(c_order, pa);
  std::string target;
  c_order->add_option("--target", target, "SL4, Sp4 or SU4 (default: the ambient group)");
  auto* c_forms = app.add_subcommand("forms", "invariant bilinear and hermitian forms");
  add_pair_options(c_forms, pa);
  bool full_scan = false;
  c_forms->add_flag("--all-multipliers", full_scan, "scan every multiplier in F*, not just +-1");
  auto* c_scott = app.add_subcommand("scott", "Scott fixed-space dimensions");
  add_pair_options(c_scott, pa);
  auto* c_identify = app.add_subcommand("identify", "identify a small quotient by presentation");
  add_pair_options(c_identify, pa);

  std::string sweep_field, constraint = "r2=0";
  unsigned sweep_k = 0;
  int sweep_d = 1;
  auto* c_sweep = app.add_subcommand("sweep", "classify every tuple of a family");
  c_sweep->add_option("--field", sweep_field, "field")->required();
  c_sweep->add_option("--k", sweep_k, "order of y")->required();
  c_sweep->add_option("--d", sweep_d, "d")->check(CLI::IsMember({1, -1}));
  c_sweep->add_option("--constraint", constraint, "r2=0, r2=-r4, r2=d*r4^q or all");

  std::string vtarget;
  auto* c_verify = app.add_subcommand("verify", "check one family of claims");
  c_verify->add_option("target", vtarget, "target name or 'all'")->required();

  std::string table;
  auto* c_table = app.add_subcommand("reproduce-table", "recompute a parameter table");
  c_table->add_option("table", table, "4 or 5")->required()->check(CLI::IsMember({"4", "5"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  OrderOptions oo = order_options(max_points);
  try {
    if (c_classify->parsed()) {
      GeneratorPair pr = build_pair(pa);
      Classification c = classify(pr, oo);
      emit({{"pair", to_json(pr)}, {"classification", to_json(c)}}, as_json,
           pr.str() + "\n" + class_kind_name(c.kind) + (c.detail.empty() ? "" : ": " + c.detail));
    } else if (c_order->parsed()) {
      GeneratorPair pr = build_pair(pa);
      Classical t = target.empty() ? ambient_group(pr) : parse_classical(target);
      VerdictReport v = verdict(pr, t, oo);
      json j{{"pair", to_json(pr)},          {"target", classical_name(t)}, {"verdict", verdict_name(v.verdict)},
             {"order", v.order.str()},       {"target_order", v.target_order.str()}, {"detail", v.detail}};
      emit(j, as_json,
           classical_name(t) + ": " + verdict_name(v.verdict) + ", |H| = " + v.order.str() + " (target " +
               v.target_order.str() + ")");
    } else if (c_forms->parsed()) {
      GeneratorPair pr = build_pair(pa);
      json arr = json::array();
      std::string human;
      for (const InvariantForm& form : pair_forms(pr, full_scan)) {
        json m = json::array();
        for (const GF& g : form.multipliers)
          m.push_back(g.str());
        arr.push_back({{"kind", form_kind_name(form.kind)}, {"multipliers", m}, {"sigma_power", form.sigma_power},
                       {"gram", form.J.str_rows()}});
        human += form_kind_name(form.kind) + " multipliers " + m.dump() + "\n" + form.J.str() + "\n";
      }
      emit({{"pair", to_json(pr)}, {"forms", arr}}, as_json, human.empty() ? "no nondegenerate form" : human);
    } else if (c_scott->parsed()) {
      GeneratorPair pr = build_pair(pa);
      ScottReport s = scott(pr);
      json j{{"d_x", s.d_x}, {"d_y", s.d_y}, {"d_xy", s.d_xy}, {"sum", s.sum}, {"rigid", s.rigid}};
      emit(j, as_json,
           "d_x=" + std::to_string(s.d_x) + " d_y=" + std::to_string(s.d_y) + " d_xy=" + std::to_string(s.d_xy) +
               " sum=" + std::to_string(s.sum));
    } else if (c_identify->parsed()) {
      GeneratorPair pr = build_pair(pa);
      auto id = identify_quotient(pr, oo);
      json j = id ? json{{"name", id->name},
                         {"method", id->method},
                         {"certified", id->certified},
                         {"order", id->order.str()},
                         {"projective_order", id->projective_order.str()},
                         {"index", id->index.str()}}
                  : json(nullptr);
      emit({{"pair", to_json(pr)}, {"identification", j}}, as_json,
           id ? id->name + (id->certified ? " (certified, " : " (by order, ") + id->method + ")" : "not identified");
    } else if (c_sweep->parsed()) {
      const Field& f = parse_field(sweep_field);
      SweepOptions so{threads, oo};
      auto recs = sweep(f, sweep_k, sweep_d, parse_constraint(constraint), so);
      std::map<std::string, size_t> tally;
      for (const SweepRecord& r : recs) {
        std::string key = r.constructed ? class_kind_name(r.cls.kind) : "skipped";
        tally[key]++;
        if (as_json)
          std::cout << to_json(r).dump() << "\n";
        else if (r.constructed)
          std::cout << r.pair.str() << ": " << key << (r.cls.detail.empty() ? "" : " (" + r.cls.detail + ")") << "\n";
      }
      json summary{{"summary", tally}};
      emit(summary, as_json, "summary " + json(tally).dump());
    } else if (c_verify->parsed()) {
      VerifyOptions vo{threads, oo};
      std::vector<std::string> targets = vtarget == "all" ? verify_targets() : std::vector<std::string>{vtarget};
      bool ok = true;
      for (const std::string& t : targets) {
        VerifyReport rep = verify(t, vo);
        ok = ok && rep.pass();
        if (as_json) {
          std::cout << to_json(rep).dump() << "\n";
          continue;
        }
        for (const ClaimResult& c : rep.claims)
          std::cout << (c.asserted ? (c.pass ? "  ok    " : "  FAIL  ") : "  note  ") << c.id << "\n";
        std::cout << t << ": " << (rep.pass() ? "PASS" : "FAIL") << "\n";
      }
      return ok ? 0 : 1;
    } else if (c_table->parsed()) {
      bool ok = true;
      if (table == "5") {
        Table5 t = reproduce_table5();
        for (const std::string& m : t.mapping)
          emit({{"mapping", m}}, as_json, m);
        for (const Table5Row& r : t.rows) {
          ok = ok && r.match();
          json j{{"q", r.q}, {"d", r.d}, {"k", r.k}, {"s", r.s}, {"b", r.b}, {"expected", r.expected}, {"match", r.match()}};
          emit(j, as_json,
               "q=" + std::to_string(r.q) + " d=" + std::to_string(r.d) + " k=" + std::to_string(r.k) + " s=" + r.s +
                   ": b = " + join(r.b) + (r.match() ? "  [match]" : "  [MISMATCH, expected " + join(r.expected) + "]"));
        }
      } else {
        for (const Table4Witness& w : reproduce_table4({threads, oo})) {
          ok = ok && w.pass;
          json j{{"row", w.row}, {"expectation", w.expectation}, {"pass", w.pass}, {"evidence", w.evidence}};
          std::string where = w.found ? w.pair.str() : "no witness";
          emit(j, as_json,
               w.row + ": " + where + "\n  " + (w.found ? class_kind_name(w.cls.kind) + " " + w.cls.detail : "") +
                   "  [" + (w.pass ? "ok" : "FAIL") + ": " + w.expectation + "]");
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
