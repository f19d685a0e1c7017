#include "clgen/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "clgen/forms.hpp"
#include "clgen/linalg.hpp"
#include "clgen/numtheory.hpp"
#include "clgen/poly.hpp"
#include "clgen/presentations.hpp"

namespace clgen {

using nlohmann::json;

bool VerifyReport::pass() const
{
  for (const ClaimResult& c : claims)
    if (c.asserted && !c.pass)
      return false;
  return true;
}

json to_json(const VerifyReport& r)
{
  json claims = json::array();
  for (const ClaimResult& c : r.claims)
    claims.push_back({{"id", c.id}, {"pass", c.pass}, {"asserted", c.asserted}, {"evidence", c.evidence}});
  return {{"target", r.target}, {"pass", r.pass()}, {"claims", claims}};
}

const std::vector<std::string>& verify_targets()
{
  static const std::vector<std::string> t{"nr-i",  "nr-ii", "nr-iii",  "nr-iv",   "sl3-su9-not23", "sl-not24",
                                          "psu-not24", "sl4", "sp4", "su4", "su4-2", "lemma26", "table4",
                                          "table5", "tuples-48-54"};
  return t;
}

// ------------------------------------------------------------ hypotheses

namespace {

bool generates(const Field& f, const std::vector<GF>& elems)
{
  return generated_subfield(f, elems) == f.degree();
}

std::vector<GF> roots_of(const Field& f, std::vector<int64_t> low_to_high)
{
  return poly_roots(Poly(&f, low_to_high));
}

std::string tuple_str(const std::array<GF, 4>& r)
{
  return "(" + r[0].str() + "," + r[1].str() + "," + r[2].str() + "," + r[3].str() + ")";
}

std::array<GF, 4> special(const GF& r2, const GF& r4)
{
  GF z = r4.field().el(0);
  return {z, r2, z, r4};
}

std::vector<int> d_values(const Field& f)
{
  return f.p() == 2 ? std::vector<int>{1} : std::vector<int>{1, -1};
}

}  // namespace

bool sl4_hypotheses(const GF& s, int d, const GF& r4)
{
  const Field& f = r4.field();
  if (r4.is_zero() || !generates(f, {s, r4 * r4}))
    return false;
  GF c = s - f.el(2);
  return r4 * r4 != c * c * f.el(d);
}

bool sp4_hypotheses(unsigned k, const GF& s, const GF& r4)
{
  const Field& f = r4.field();
  uint32_t p = f.p();
  if (p == 2 || k == p || r4.is_zero() || !generates(f, {s, r4 * r4}))
    return false;
  if (k == 3 && p != 3 && r4.pow(4) == f.el(-3))
    return false;
  return true;
}

uint64_t unitary_q(const Field& fq2)
{
  if (fq2.degree() % 2 != 0)
    throw Error(ErrorCode::HypothesisNotMet, "a unitary pair needs a field of even degree");
  return ipow(fq2.p(), fq2.degree() / 2);
}

UnitaryHypotheses unitary_hypotheses(const GF& s, int d, const GF& r4)
{
  const Field& f = r4.field();
  uint64_t q = unitary_q(f);
  uint32_t p = f.p();
  unsigned half = f.degree() / 2;
  GF dd = f.el(d), two = f.el(2);
  GF r2 = dd * r4.frob(half);
  UnitaryHypotheses h;
  h.q_not_3 = q != 3;
  h.field = !r4.is_zero() && generates(f, {r4 * r4});

  h.cond_i = true;
  if (!r4.is_zero()) {
    GF lhs = r4.pow(static_cast<int64_t>(q - 1));
    Poly m(&f, std::vector<code_t>{1, f.neg(s.code()), 1});
    for (const GF& e : poly_roots(m))
      h.cond_i = h.cond_i && lhs != -(dd * e);
  }
  GF v = r4 + dd * r4.frob(half);
  h.cond_ii = v * v != dd * (two - s) * (two - s);

  h.cond_iii = true;
  h.cond_iv = true;
  std::vector<GF> is = sqrts_in_field(f.el(-1));
  if (q == p && p != 2 && !is.empty()) {
    GF i = is.front(), half_inv = two.inv();
    if ((q % 7 == 3 || q % 7 == 5 || q % 7 == 6) && s == f.el(-1)) {
      std::vector<GF> sq7 = sqrts_in_field(f.el(-7));
      for (const GF& root : sq7)
        for (int h4 = 0; h4 < 4; h4++) {
          GF a = -(i.pow(3 * h4)) * (root - f.el(1)) * half_inv;
          GF b = dd * i.pow(h4) * (root + f.el(1)) * half_inv;
          if (r2 == a && r4 == b)
            h.cond_iii = false;
        }
    }
    if (q % 6 == 5 && s.is_zero()) {
      for (const GF& w : roots_of(f, {1, 1, 1}))
        for (int h4 = 0; h4 < 4; h4++)
          if (r2 == i.pow(-h4) * w && r4 == dd * i.pow(h4) * w * w)
            h.cond_iv = false;
    }
  }
  return h;
}

std::vector<unsigned> classical_k(uint32_t p, uint64_t q)
{
  std::vector<unsigned> out;
  uint64_t top = std::max<uint64_t>(q + 1, 2 * p);
  for (uint64_t k = 3; k <= top; k++)
    if ((q - 1) % k == 0 || (q + 1) % k == 0 || k == p || k == 2 * p)
      out.push_back(static_cast<unsigned>(k));
  return out;
}

std::vector<GF> unitary_s_values(const Field& fq2, unsigned k)
{
  return s_values(fq2, k);
}

// ------------------------------------------------------------ F9 tuples

namespace {

GF xi_root(const Field& f9, bool other)
{
  std::vector<GF> roots = roots_of(f9, {-1, -1, 1});
  std::sort(roots.begin(), roots.end(), [&](const GF& a, const GF& b) { return f9.log(a.code()) < f9.log(b.code()); });
  return roots.at(other ? 1 : 0);
}

GF xi_const(const std::string& text, const GF& xi)
{
  const Field& f = xi.field();
  std::string s = text;
  GF sign = f.el(1);
  if (!s.empty() && s[0] == '-') {
    sign = f.el(-1);
    s = s.substr(1);
  }
  if (s.rfind("xi", 0) == 0)
    return sign * xi.pow(s.size() > 2 ? std::stoll(s.substr(3)) : 1);
  return sign * f.el(std::stoll(s));
}

bool tuple_less(const std::array<GF, 4>& a, const std::array<GF, 4>& b)
{
  for (int i = 0; i < 4; i++)
    if (a[i].code() != b[i].code())
      return a[i].code() < b[i].code();
  return false;
}

bool tuple_eq(const std::array<GF, 4>& a, const std::array<GF, 4>& b)
{
  return !tuple_less(a, b) && !tuple_less(b, a);
}

void sort_unique(std::vector<std::array<GF, 4>>& v)
{
  std::sort(v.begin(), v.end(), tuple_less);
  v.erase(std::unique(v.begin(), v.end(), tuple_eq), v.end());
}

}  // namespace

std::vector<std::array<GF, 4>> psu9_tuples_enumerated(int d)
{
  const Field& f = field_create(3, 2);
  GF dd = f.el(d);
  std::vector<GF> is = sqrts_in_field(f.el(-1));
  std::vector<std::array<GF, 4>> out;
  uint32_t n = f.size();
  for (uint32_t code = 0; code < n * n * n * n; code++) {
    std::array<GF, 4> r;
    uint32_t v = code;
    for (auto& e : r) {
      e = f.wrap(v % n);
      v /= n;
    }
    const GF &r1 = r[0], &r2 = r[1], &r3 = r[2], &r4 = r[3];
    // (xy)^sigma has the characteristic polynomial of (xy)^-1.
    if (r1.pow(3) + r4.pow(3) != dd * (r1 + r2 - r3))
      continue;
    if (!f.in_prime_field((r1 * r4 - r2 * r3 - f.el(2)).code()))
      continue;
    // Irreducibility.
    if (r1 - r2 + r3 == r4)
      continue;
    bool ok = true;
    for (const GF& i : is)
      ok = ok && !(r1 * r4 - r2 * r3 + i * (r1 - r2 + r3 - r4)).is_zero();
    if (!ok)
      continue;
    if (std::all_of(r.begin(), r.end(), [&](const GF& g) { return f.in_prime_field(g.code()); }))
      continue;
    // The pair comes from SU4(9): it fixes a hermitian form. Over d = 1 this
    // removes 96 tuples that meet every condition above.
    GeneratorPair pr = make_pair_s(f, f.el(-1), d, r);
    bool unitary = false;
    for (const InvariantForm& form : pair_forms(pr))
      unitary = unitary || (form.kind == FormKind::Hermitian &&
                            std::all_of(form.multipliers.begin(), form.multipliers.end(),
                                        [](const GF& m) { return m.is_one(); }));
    if (!unitary)
      continue;
    out.push_back(r);
  }
  sort_unique(out);
  return out;
}

std::vector<std::array<GF, 4>> psu9_tuples_listed(int d, char family)
{
  const Field& f = field_create(3, 2);
  GF xi = xi_root(f, false);
  json data = json::parse(psu_case_data());
  const json& rows = data.at("tuples_23").at(d == 1 ? "1" : "-1").at(std::string(1, family));
  std::vector<std::array<GF, 4>> out;
  for (const auto& row : rows) {
    std::array<GF, 4> t;
    for (int i = 0; i < 4; i++)
      t[i] = xi_const(row.at(i).get<std::string>(), xi);
    for (int sign : {1, -1})
      for (int fr : {0, 1}) {
        std::array<GF, 4> u;
        for (int i = 0; i < 4; i++)
          u[i] = (f.el(sign) * t[i]).frob(fr);
        out.push_back(u);
      }
  }
  sort_unique(out);
  return out;
}

// ------------------------------------------------------------ sweeps

namespace {

struct Tally {
  size_t tuples = 0, constructed = 0, contained = 0, full = 0, proper = 0, too_large = 0;
  std::vector<std::string> full_examples;

  json to_json() const
  {
    return {{"tuples", tuples},     {"constructed", constructed}, {"contained", contained}, {"full", full},
            {"proper", proper},     {"too_large", too_large},     {"full_examples", full_examples}};
  }
};

std::vector<std::array<GF, 4>> all_tuples(const Field& f)
{
  return sweep_tuples(f, 1, Constraint::All);
}

Tally tally(const Field& f, const GF& s, int d, const std::vector<std::array<GF, 4>>& tuples, Classical target,
            const VerifyOptions& opt)
{
  std::vector<int> outcome(tuples.size(), -1);
  parallel_for(tuples.size(), opt.threads, [&](size_t i) {
    GeneratorPair pr;
    try {
      pr = make_pair_s(f, s, d, tuples[i]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateY)
        return;
      throw;
    }
    outcome[i] = static_cast<int>(verdict(pr, target, opt.order).verdict);
  });
  Tally t;
  t.tuples = tuples.size();
  for (size_t i = 0; i < tuples.size(); i++) {
    if (outcome[i] < 0)
      continue;
    t.constructed++;
    Verdict v = static_cast<Verdict>(outcome[i]);
    if (v != Verdict::NotContained)
      t.contained++;
    if (v == Verdict::Full) {
      t.full++;
      if (t.full_examples.size() < 8)
        t.full_examples.push_back(tuple_str(tuples[i]));
    } else if (v == Verdict::Proper) {
      t.proper++;
    } else if (v == Verdict::TooLarge) {
      t.too_large++;
    }
  }
  return t;
}

// Exhaustive sweeps over F^4 are shared between targets.
Tally tally_all(const Field& f, const GF& s, int d, Classical target, const VerifyOptions& opt)
{
  static std::mutex mu;
  static std::map<std::string, Tally> cache;
  std::string key = f.spec_string() + "|" + s.str() + "|" + std::to_string(d) + "|" + classical_name(target);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  Tally t = tally(f, s, d, all_tuples(f), target, opt);
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = t;
  return t;
}

GF s_for(const Field& f, unsigned k)
{
  return make_pair(f, k, 1, {f.el(0), f.el(0), f.el(0), f.el(1)}).s;
}

json sweep_label(const Field& f, unsigned k, const GF& s, int d, Classical target)
{
  return {{"field", f.spec_string()}, {"k", k}, {"s", s.str()}, {"d", d}, {"target", classical_name(target)}};
}

// No (2,3) pair over F_q generates Sp4(q).
ClaimResult no_full(const std::string& id, const Field& f, unsigned k, const GF& s, int d, Classical target,
                    const VerifyOptions& opt, bool asserted = true)
{
  Tally t = tally_all(f, s, d, target, opt);
  ClaimResult c{id, t.full == 0 && t.too_large == 0, asserted, sweep_label(f, k, s, d, target)};
  c.evidence["tally"] = t.to_json();
  return c;
}

}  // namespace

// ------------------------------------------------------------ unitary exponent table

Table5 reproduce_table5()
{
  struct Spec {
    uint64_t q;
    int d;
    unsigned k;
    std::string s;
    std::vector<unsigned> b;
  };
  static const std::vector<Spec> expected{
      {5, 1, 4, "0", {1, 4, 5, 8, 13, 16, 17, 20}},
      {5, 1, 3, "-1", {4, 8, 16, 20}},
      {5, 1, 6, "1", {7, 11, 19, 23}},
      {5, 1, 5, "2", {1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23}},
      {5, 1, 10, "-2", {2, 7, 10, 11, 14, 19, 22, 23}},
      {5, -1, 4, "0", {1, 2, 5, 7, 10, 11, 13, 14, 17, 19, 22, 23}},
      {5, -1, 3, "-1", {7, 11, 19, 23}},
      {5, -1, 6, "1", {2, 4, 8, 10, 14, 16, 20, 22}},
      {5, -1, 5, "2", {1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23}},
      {5, -1, 10, "-2", {1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 23}},
      {4, 1, 3, "-1", {3, 6, 7, 9, 11, 12, 13, 14}},
      {4, 1, 5, "omega", {1, 4, 11, 14}},
      {4, 1, 5, "omega^2", {2, 7, 8, 13}},
      {4, 1, 4, "0", {1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14}},
  };
  Table5 out;
  std::map<uint64_t, GF> alpha;
  // Reference generators: alpha^2 - alpha + 2 = 0 in F25, alpha^4 + alpha + 1 = 0 in F16.
  for (auto [q, poly] : std::vector<std::pair<uint64_t, std::vector<int64_t>>>{{5, {2, -1, 1}}, {4, {1, 1, 0, 0, 1}}}) {
    const Field& f = field_create(q == 5 ? 5 : 2, q == 5 ? 2 : 4);
    std::vector<GF> roots = roots_of(f, poly);
    GF a = *std::min_element(roots.begin(), roots.end(),
                             [&](const GF& x, const GF& y) { return f.log(x.code()) < f.log(y.code()); });
    alpha.emplace(q, a);
    std::string m = "q=" + std::to_string(q) + ": field " + f.spec_string() + " with modulus (constant first)";
    for (uint32_t c : f.modulus())
      m += " " + std::to_string(c);
    m += "; alpha = g^" + std::to_string(f.log(a.code())) + " (the root of least exponent among " +
         std::to_string(roots.size()) + " conjugates)";
    out.mapping.push_back(m);
  }
  for (const Spec& e : expected) {
    const Field& f = field_create(e.q == 5 ? 5 : 2, e.q == 5 ? 2 : 4);
    GF a = alpha.at(e.q);
    GF omega = a.pow(5);
    std::vector<GF> ss = s_values(f, e.k);
    GF s;
    bool found = false;
    for (const GF& c : ss) {
      std::string label;
      if (e.q == 4 && e.k == 5)
        label = c == omega ? "omega" : c == omega * omega ? "omega^2" : c.str();
      else
        label = c.is_zero() ? "0" : c == f.el(1) ? "1" : c == f.el(-1) ? "-1" : c == f.el(2) ? "2" : c == f.el(-2) ? "-2" : c.str();
      // In characteristic 2, -1 = 1 and the printed label is -1.
      if (e.q == 4 && e.k == 3 && c == f.el(1))
        label = "-1";
      if (label == e.s) {
        s = c;
        found = true;
      }
    }
    Table5Row row{e.q, e.d, e.k, e.s, {}, e.b};
    if (found)
      for (unsigned b = 0; b + 1 < f.size(); b++)
        if (unitary_hypotheses(s, e.d, a.pow(b)).all())
          row.b.push_back(b);
    out.rows.push_back(row);
  }
  return out;
}

// ------------------------------------------------------------ exceptional ledger

std::vector<Table4Witness> reproduce_table4(const VerifyOptions& opt)
{
  static const std::vector<std::pair<uint32_t, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                                                                  {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1}, {19, 1}};
  // First witness of a row over f (k ascending, s, d, r4, r2 by code), skipping reducible pairs for
  // rows that predict something else.
  auto find = [](const std::string& row, const Field& f) -> std::optional<GeneratorPair> {
    bool want_reducible = exceptional_row(row).reducible;
    for (unsigned k : admissible_k(f))
      for (const GF& s : s_values(f, k))
        for (int d : d_values(f))
          for (code_t c4 = 1; c4 < f.size(); c4++)
            for (code_t c2 = 0; c2 < f.size(); c2++) {
              GeneratorPair pr;
              try {
                pr = make_pair_s(f, s, d, special(f.wrap(c2), f.wrap(c4)));
              } catch (const Error&) {
                continue;
              }
              auto m = exceptional_match(pr);
              if (std::find(m.begin(), m.end(), row) == m.end())
                continue;
              if (!want_reducible && reducibility(pr).reducible)
                continue;
              return pr;
            }
    return std::nullopt;
  };

  std::vector<Table4Witness> out;
  auto witness_at = [&](const std::string& row, const Field& f, const std::string& expectation) {
    Table4Witness w;
    w.row = row;
    w.expectation = expectation;
    if (auto pr = find(row, f)) {
      w.found = true;
      w.pair = *pr;
      w.cls = classify(*pr, opt.order);
      w.evidence["pair"] = to_json(*pr);
      w.evidence["classification"] = to_json(w.cls);
    } else {
      w.evidence["field"] = f.spec_string();
      w.evidence["note"] = "no witness over this field";
    }
    return w;
  };
  auto smallest = [&](const std::string& row, const std::string& expectation) {
    const auto& ex = exceptional_row(row).excluded_p;
    for (auto [p, a] : fields) {
      if (std::find(ex.begin(), ex.end(), p) != ex.end())
        continue;
      const Field& f = field_create(p, a);
      if (find(row, f))
        return witness_at(row, f, expectation);
    }
    Table4Witness w;
    w.row = row;
    w.expectation = expectation;
    return w;
  };
  auto proj_order = [](const Table4Witness& w) -> std::string {
    const json& ev = w.cls.evidence;
    return ev.contains("order") && ev["order"].contains("projective_order") ? ev["order"]["projective_order"].get<std::string>()
                                                                             : "";
  };
  auto lin_order = [](const Table4Witness& w) -> std::string {
    const json& ev = w.cls.evidence;
    return ev.contains("order") && ev["order"].contains("order") ? ev["order"]["order"].get<std::string>() : "";
  };

  for (const char* row : {"reducible-i", "reducible-ii"}) {
    Table4Witness w = smallest(row, "Reducible");
    w.pass = w.found && w.cls.kind == ClassKind::Reducible;
    out.push_back(w);
  }
  {
    Table4Witness w = smallest("alt5", "Exceptional, projective order 60");
    w.pass = w.found && w.cls.kind == ClassKind::Exceptional && proj_order(w) == "60";
    out.push_back(w);
  }
  {
    // Containment in CSp4: a fixed skew form up to multipliers.
    Table4Witness w = smallest("cpsp", "fixes a skew form (inside CSp4)");
    bool skew = false;
    if (w.found)
      for (const InvariantForm& form : pair_forms(w.pair))
        skew = skew || form.kind == FormKind::Skew;
    w.evidence["skew_form"] = skew;
    w.pass = w.found && skew;
    out.push_back(w);
  }
  {
    Table4Witness w = smallest("c6-sqrt-d", "Exceptional, projective order 60");
    w.pass = w.found && w.cls.kind == ClassKind::Exceptional && proj_order(w) == "60";
    out.push_back(w);
  }
  {
    Table4Witness w = smallest("c6-sqrt-2d", "Exceptional, order 576");
    w.pass = w.found && w.cls.kind == ClassKind::Exceptional && lin_order(w) == "576";
    out.push_back(w);
  }
  {
    Table4Witness w = smallest("a7", "Exceptional, PSL2(7) of order 168 at p = 7");
    w.pass = w.found && w.pair.f().p() == 7 && w.cls.kind == ClassKind::Exceptional && proj_order(w) == "168" &&
             w.cls.detail.find("PSL2(7)") != std::string::npos;
    out.push_back(w);
  }
  {
    // The row is a necessary condition only: over F_7 every matching pair is
    // either all of SL4(7) or has projective image of order |PSp4(3)|.
    const Field& f = field_create(7, 1);
    Table4Witness w;
    w.row = "psp43";
    w.expectation = "every match over F_7 is full or of projective order 25920, and some are 25920";
    json pairs = json::array();
    size_t small = 0, full = 0, other = 0;
    for (unsigned k : admissible_k(f))
      for (const GF& s : s_values(f, k))
        for (int d : d_values(f))
          for (code_t c4 = 1; c4 < f.size(); c4++)
            for (code_t c2 = 0; c2 < f.size(); c2++) {
              GeneratorPair pr;
              try {
                pr = make_pair_s(f, s, d, special(f.wrap(c2), f.wrap(c4)));
              } catch (const Error&) {
                continue;
              }
              auto m = exceptional_match(pr);
              if (std::find(m.begin(), m.end(), "psp43") == m.end())
                continue;
              Classification c = classify(pr, opt.order);
              std::string po = c.evidence.contains("order") && c.evidence["order"].contains("projective_order")
                                   ? c.evidence["order"]["projective_order"].get<std::string>()
                                   : "";
              bool is_small = c.kind == ClassKind::Exceptional && po == "25920";
              small += is_small;
              full += c.kind == ClassKind::FullGroup;
              other += !is_small && c.kind != ClassKind::FullGroup;
              if (is_small && !w.found) {
                w.found = true;
                w.pair = pr;
                w.cls = c;
              }
              pairs.push_back({{"pair", pr.str()}, {"class", class_kind_name(c.kind)}, {"projective_order", po}});
            }
    w.evidence = {{"matches", pairs}, {"psp43_order", small}, {"full", full}, {"other", other}};
    w.pass = small > 0 && other == 0;
    out.push_back(w);
  }
  // r4^4 = -3: proper inside Sp4(q) at q = 7; at q = 11 no r4 in F_11 has r4^4 = -3, so the pair
  // lives over F_121 and the containment is shown through the cubic representation of SL2.
  {
    Table4Witness w = witness_at("psl2", field_create(7, 1), "proper inside Sp4(7)");
    if (w.found) {
      VerdictReport v = verdict(w.pair, Classical::Sp4, opt.order);
      w.evidence["verdict"] = verdict_name(v.verdict);
      w.evidence["order"] = v.order.str();
      w.pass = v.verdict == Verdict::Proper;
    }
    out.push_back(w);
  }
  {
    const Field& f11 = field_create(11, 1);
    const Field& f121 = field_create(11, 2);
    Table4Witness w;
    w.row = "psl2";
    w.expectation = "inside the image of SL2(121) in Sp4(121) (q = 11)";
    size_t in_f11 = 0;
    for (code_t c = 1; c < f11.size(); c++)
      in_f11 += f11.wrap(c).pow(4) == f11.el(-3);
    w.evidence["roots_in_F11"] = in_f11;
    json checks = json::array();
    bool all = true;
    size_t count = 0;
    for (code_t c = 1; c < f121.size(); c++) {
      GF r = f121.wrap(c);
      if (r.pow(4) != f121.el(-3))
        continue;
      GeneratorPair pr = make_pair(f121, 3, -1, special(-r, r));
      auto m = exceptional_match(pr);
      bool row = std::find(m.begin(), m.end(), "psl2") != m.end();
      Matrix qm = cubic_conjugator(r);
      bool conj_x = qm.inverse() * cubic_rep(cubic_x2(&f121)) * qm == pr.x;
      bool conj_y = qm.inverse() * cubic_rep(cubic_y2(r)) * qm == pr.y;
      bool skew = false;
      for (const InvariantForm& form : pair_forms(pr))
        skew = skew || (form.kind == FormKind::Skew && form.multipliers[0].is_one() && form.multipliers[1].is_one());
      bool ok = row && conj_x && conj_y && skew;
      if (!w.found) {
        w.found = true;
        w.pair = pr;
      }
      all = all && ok;
      count++;
      checks.push_back({{"r4", r.str()}, {"row", row}, {"conj_x", conj_x}, {"conj_y", conj_y}, {"skew_form", skew}});
    }
    // |SL2(121)| < |Sp4(121)|: conjugation into the image of SL2 makes H proper.
    w.evidence["pairs"] = checks;
    w.pass = in_f11 == 0 && count > 0 && all;
    out.push_back(w);
  }
  {
    Table4Witness w = witness_at("psl2", field_create(19, 1), "proper inside Sp4(19)");
    if (w.found) {
      VerdictReport v = verdict(w.pair, Classical::Sp4, opt.order);
      w.evidence["verdict"] = verdict_name(v.verdict);
      w.evidence["order"] = v.order.str();
      w.pass = v.verdict == Verdict::Proper;
    }
    out.push_back(w);
  }
  return out;
}

// ------------------------------------------------------------ targets

namespace {

VerifyReport verify_nr_i(const VerifyOptions& opt)
{
  VerifyReport rep{"nr-i", {}};
  for (uint32_t p : {3u, 5u}) {
    const Field& f = field_create(p, 1);
    GF s = s_for(f, 3);
    // x^2 = dI: only d = 1 gives an involution, so d = 1 carries the claim for
    // Sp4(q). With d = -1 a full pair only (2,3)-generates PSp4(q), which is
    // excluded for p = 3 and recorded otherwise.
    rep.claims.push_back(
        no_full("no (2,3) pair generates Sp4(" + std::to_string(p) + ") (d=1)", f, 3, s, 1, Classical::Sp4, opt));
    if (p == 3) {
      rep.claims.push_back(no_full("no d=-1 pair generates Sp4(3)", f, 3, s, -1, Classical::Sp4, opt));
    } else {
      ClaimResult c = no_full("d=-1 outcome, Sp4(" + std::to_string(p) + ") (x of order 4)", f, 3, s, -1,
                              Classical::Sp4, opt, false);
      c.pass = true;
      rep.claims.push_back(c);
    }
  }
  return rep;
}

VerifyReport verify_nr_iv(const VerifyOptions& opt)
{
  VerifyReport rep{"nr-iv", {}};
  for (uint32_t p : {3u, 5u}) {
    const Field& f = field_create(p, 1);
    for (unsigned k : admissible_k(f))
      for (const GF& s : s_values(f, k)) {
        rep.claims.push_back(no_full("Sp4(" + std::to_string(p) + ") not generated, d=1, k=" + std::to_string(k), f, k,
                                     s, 1, Classical::Sp4, opt));
        // The d = -1 outcome is recorded, not asserted.
        ClaimResult c = no_full("d=-1 outcome, Sp4(" + std::to_string(p) + "), k=" + std::to_string(k), f, k, s, -1,
                                Classical::Sp4, opt, false);
        c.pass = true;
        rep.claims.push_back(c);
      }
  }
  return rep;
}

VerifyReport verify_nr_ii(const VerifyOptions& opt)
{
  VerifyReport rep{"nr-ii", {}};
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const Field& f = field_create(p, a);
    uint64_t q = f.size();
    BigInt psp = classical_order(Classical::Sp4, q) / (p == 2 ? 1 : 2);
    GF s = s_for(f, 3);
    for (int d : d_values(f)) {
      auto tuples = all_tuples(f);
      std::vector<int> state(tuples.size(), 0);  // 0 skipped/no form, 1 skew form, 2 projective PSp4(q)
      std::vector<std::string> orders(tuples.size());
      parallel_for(tuples.size(), opt.threads, [&](size_t i) {
        GeneratorPair pr;
        try {
          pr = make_pair_s(f, s, d, tuples[i]);
        } catch (const Error&) {
          return;
        }
        bool skew = false;
        for (const auto& sol : solve_forms({pr.x, pr.y}, 0, sign_multipliers(f, 2)))
          for (const auto& form : sol.forms)
            skew = skew || form.kind == FormKind::Skew;
        if (!skew)
          return;
        GroupReport g = group_report({pr.x, pr.y}, opt.order);
        state[i] = g.projective_order == psp ? 2 : 1;
        orders[i] = g.projective_order.str();
      });
      size_t skew = 0, hits = 0;
      std::map<std::string, size_t> histogram;
      for (size_t i = 0; i < tuples.size(); i++) {
        skew += state[i] >= 1;
        hits += state[i] == 2;
        if (state[i])
          histogram[orders[i]]++;
      }
      ClaimResult c{"PSp4(" + std::to_string(q) + ") not a (2,3) image, d=" + std::to_string(d), hits == 0, true, {}};
      c.evidence = {{"field", f.spec_string()},      {"tuples", tuples.size()}, {"skew_form", skew},
                    {"psp4_order", psp.str()},       {"hits", hits},           {"projective_orders", histogram}};
      rep.claims.push_back(c);
    }
  }
  return rep;
}

VerifyReport verify_nr_iii(const VerifyOptions& opt)
{
  VerifyReport rep{"nr-iii", {}};
  const Field& f = field_create(2, 1);
  GF s = s_for(f, 3);
  std::vector<std::string> irreducible;
  bool traps = true;
  for (const auto& r : all_tuples(f)) {
    GeneratorPair pr;
    try {
      pr = make_pair_s(f, s, 1, r);
    } catch (const Error&) {
      continue;
    }
    if (reducibility(pr).reducible)
      continue;
    irreducible.push_back(tuple_str(r));
    traps = traps && orthogonal_trap(pr);
  }
  std::sort(irreducible.begin(), irreducible.end());
  std::vector<std::string> expect{"(0,0,1,1)", "(0,1,0,1)", "(1,0,0,0)"};
  rep.claims.push_back({"irreducible (2,3) tuples over F2", irreducible == expect, true, {{"irreducible", irreducible}}});
  rep.claims.push_back({"orthogonal trap on every irreducible tuple", traps && !irreducible.empty(), true, {}});
  rep.claims.push_back(no_full("SL4(2) not (2,3)-generated", f, 3, s, 1, Classical::SL4, opt));
  return rep;
}

VerifyReport verify_tuples(const VerifyOptions& opt)
{
  VerifyReport rep{"tuples-48-54", {}};
  const Field& f9 = field_create(3, 2);
  for (int d : {1, -1}) {
    auto got = psu9_tuples_enumerated(d);
    size_t want = d == 1 ? 48 : 54;
    rep.claims.push_back({"count d=" + std::to_string(d), got.size() == want, true,
                          {{"enumerated", got.size()}, {"expected", want}}});
    auto a = psu9_tuples_listed(d, 'A'), b = psu9_tuples_listed(d, 'B');
    std::vector<std::array<GF, 4>> listed = a;
    listed.insert(listed.end(), b.begin(), b.end());
    sort_unique(listed);
    bool same = listed.size() == got.size() && std::equal(listed.begin(), listed.end(), got.begin(), tuple_eq);
    rep.claims.push_back({"enumeration equals the listed tuples, d=" + std::to_string(d), same, true,
                          {{"listed", listed.size()}, {"A", a.size()}, {"B", b.size()}}});
    // A: (xy)^5 scalar, Alt(5); B: (xy)^7 and [x,y]^4 scalar, PSL2(7).
    GF s = f9.el(-1);
    for (char fam : {'A', 'B'}) {
      const auto& list = fam == 'A' ? a : b;
      std::vector<int> ok(list.size(), 0);
      parallel_for(list.size(), opt.threads, [&](size_t i) {
        GeneratorPair pr = make_pair_s(f9, s, d, list[i]);
        Matrix xy = pr.xy();
        bool scal = fam == 'A' ? xy.pow(5).scalar_value().has_value()
                               : xy.pow(7).scalar_value().has_value() &&
                                     eval_word("[x,y]^4", {{"x", pr.x}, {"y", pr.y}}).scalar_value().has_value();
        PresentationCheck c = check_presentation(presentation(fam == 'A' ? "A5" : "L27_a"), {pr.x, pr.y}, opt.order);
        ok[i] = scal && c.certified;
      });
      size_t good = std::count(ok.begin(), ok.end(), 1);
      rep.claims.push_back({std::string("family ") + fam + " quotient, d=" + std::to_string(d), good == list.size(), true,
                            {{"tuples", list.size()}, {"certified", good}, {"quotient", fam == 'A' ? "Alt(5)" : "PSL2(7)"}}});
    }
  }
  return rep;
}

VerifyReport verify_sl3_su9(const VerifyOptions& opt)
{
  VerifyReport rep{"sl3-su9-not23", {}};
  const Field& f4 = field_create(2, 2);
  rep.claims.push_back(no_full("SU4(4) not (2,3)-generated", f4, 3, s_for(f4, 3), 1, Classical::SU4, opt));
  const Field& f9 = field_create(3, 2);
  for (int d : {1, -1})
    rep.claims.push_back(
        no_full("PSU4(9) not (2,3)-generated, d=" + std::to_string(d), f9, 3, s_for(f9, 3), d, Classical::SU4, opt));
  return rep;
}

VerifyReport verify_sl_not24(const VerifyOptions& opt)
{
  VerifyReport rep{"sl-not24", {}};
  const Field& f3 = field_create(3, 1);
  GF s3 = s_for(f3, 4);
  rep.claims.push_back(no_full("SL4(3) not (2,4)-generated (d=1)", f3, 4, s3, 1, Classical::SL4, opt));
  ClaimResult rec = no_full("d=-1 outcome over F3 (x of order 4)", f3, 4, s3, -1, Classical::SL4, opt, false);
  rec.pass = true;
  rep.claims.push_back(rec);
  const Field& f9 = field_create(3, 2);
  for (int d : {1, -1})
    rep.claims.push_back(
        no_full("SU4(9) not (2,4)-generated, d=" + std::to_string(d), f9, 4, s_for(f9, 4), d, Classical::SU4, opt));
  return rep;
}

VerifyReport verify_psu_not24(const VerifyOptions& opt)
{
  VerifyReport rep{"psu-not24", {}};
  for (bool other : {false, true}) {
    auto results = run_psu_cases("", other, opt.order);
    std::map<std::string, std::pair<size_t, size_t>> by_case;
    json failures = json::array();
    for (const auto& r : results) {
      auto& c = by_case[r.label];
      c.first++;
      if (r.holds())
        c.second++;
      else
        failures.push_back(r.label + " " + r.tuple);
    }
    for (const auto& [label, counts] : by_case)
      rep.claims.push_back({"case " + label + (other ? " (second root)" : ""), counts.first == counts.second, true,
                            {{"tuples", counts.first}, {"holding", counts.second}}});
    if (!failures.empty())
      rep.claims.push_back({"failures", false, true, failures});
  }
  return rep;
}

// Full-group checks over every r4 meeting the hypotheses of a criterion.
struct FullCheck {
  size_t candidates = 0, full = 0;
  std::vector<std::string> failures;
};

FullCheck check_full(const Field& f, const GF& s, int d, const std::vector<std::array<GF, 4>>& tuples, Classical target,
                     const VerifyOptions& opt)
{
  std::vector<int> v(tuples.size(), -1);
  parallel_for(tuples.size(), opt.threads, [&](size_t i) {
    v[i] = static_cast<int>(verdict(make_pair_s(f, s, d, tuples[i]), target, opt.order).verdict);
  });
  FullCheck out;
  out.candidates = tuples.size();
  for (size_t i = 0; i < tuples.size(); i++) {
    if (static_cast<Verdict>(v[i]) == Verdict::Full)
      out.full++;
    else
      out.failures.push_back(tuple_str(tuples[i]) + ": " + verdict_name(static_cast<Verdict>(v[i])));
  }
  return out;
}

json full_json(const FullCheck& c)
{
  return {{"candidates", c.candidates}, {"full", c.full}, {"failures", c.failures}};
}

VerifyReport verify_sl4(const VerifyOptions& opt)
{
  VerifyReport rep{"sl4", {}};
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
    const Field& f = field_create(p, a);
    uint64_t q = f.size();
    for (unsigned k : admissible_k(f)) {
      std::map<int, size_t> full_by_d;
      for (const GF& s : s_values(f, k))
        for (int d : d_values(f)) {
          std::vector<std::array<GF, 4>> tuples;
          for (code_t c = 1; c < f.size(); c++)
            if (sl4_hypotheses(s, d, f.wrap(c)))
              tuples.push_back(special(f.el(0), f.wrap(c)));
          FullCheck fc = check_full(f, s, d, tuples, Classical::SL4, opt);
          full_by_d[d] += fc.full;
          json ev = full_json(fc);
          ev["s"] = s.str();
          rep.claims.push_back({"SL4(" + std::to_string(q) + ") k=" + std::to_string(k) + " s=" + s.str() +
                                    " d=" + std::to_string(d) + ": every admissible r4 generates",
                                fc.failures.empty(), true, ev});
        }
      // (2,k)-generation (d = 1): SL4(q) for q > 3, SL4(2) for k = 4, SL4(3) for k = 3, 6;
      // PSL4(3) for k = 4 through d = -1.
      bool expect = q > 3 || (q == 2 && k == 4) || (q == 3 && k == 3);
      if (expect)
        rep.claims.push_back({"SL4(" + std::to_string(q) + ") is (2," + std::to_string(k) + ")-generated", full_by_d[1] > 0,
                              true, {{"full_pairs_d1", full_by_d[1]}}});
      if (q == 3 && k == 6) {
        GeneratorPair pr = make_pair(f, 6, 1, {f.el(-1), f.el(0), f.el(0), f.el(1)});
        VerdictReport v = verdict(pr, Classical::SL4, opt.order);
        rep.claims.push_back({"SL4(3) is (2,6)-generated (r1 = -1, r4 = 1)", v.verdict == Verdict::Full, true,
                              {{"pair", to_json(pr)}, {"order", v.order.str()}}});
      }
      if (q == 3 && k == 4)
        rep.claims.push_back({"PSL4(3) is (2,4)-generated (d = -1)", full_by_d[-1] > 0, true,
                              {{"full_pairs_dm1", full_by_d[-1]}}});
    }
  }
  return rep;
}

VerifyReport verify_sp4(const VerifyOptions& opt)
{
  VerifyReport rep{"sp4", {}};
  for (uint32_t p : {3u, 5u, 7u}) {
    const Field& f = field_create(p, 1);
    for (unsigned k : admissible_k(f)) {
      if (k == p)
        continue;
      size_t full = 0;
      for (const GF& s : s_values(f, k)) {
        std::vector<std::array<GF, 4>> tuples, excluded;
        for (code_t c = 1; c < f.size(); c++) {
          GF r4 = f.wrap(c);
          if (sp4_hypotheses(k, s, r4))
            tuples.push_back(special(-r4, r4));
          else if (k == 3 && p != 3 && r4.pow(4) == f.el(-3) && generates(f, {s, r4 * r4}))
            excluded.push_back(special(-r4, r4));
        }
        FullCheck fc = check_full(f, s, -1, tuples, Classical::Sp4, opt);
        full += fc.full;
        json ev = full_json(fc);
        ev["s"] = s.str();
        rep.claims.push_back({"Sp4(" + std::to_string(p) + ") k=" + std::to_string(k) + " s=" + s.str() +
                                  ": every admissible r4 generates",
                              fc.failures.empty(), true, ev});
        if (!excluded.empty()) {
          std::vector<std::string> res;
          bool proper = true;
          for (const auto& r : excluded) {
            VerdictReport v = verdict(make_pair_s(f, s, -1, r), Classical::Sp4, opt.order);
            res.push_back(tuple_str(r) + ": " + verdict_name(v.verdict) + ", order " + v.order.str());
            proper = proper && v.verdict == Verdict::Proper;
          }
          rep.claims.push_back({"Sp4(" + std::to_string(p) + ") r4^4 = -3 tuples are proper", proper, true, res});
        }
      }
      rep.claims.push_back({"PSp4(" + std::to_string(p) + ") is (2," + std::to_string(k) + ")-generated", full > 0, true,
                            {{"full_pairs", full}}});
    }
  }
  return rep;
}

std::vector<std::array<GF, 4>> unitary_candidates(const Field& f, const GF& s, int d)
{
  std::vector<std::array<GF, 4>> out;
  unsigned half = f.degree() / 2;
  for (code_t c = 1; c < f.size(); c++) {
    GF r4 = f.wrap(c);
    if (unitary_hypotheses(s, d, r4).all())
      out.push_back(special(f.el(d) * r4.frob(half), r4));
  }
  return out;
}

VerifyReport verify_su4(const VerifyOptions& opt)
{
  VerifyReport rep{"su4", {}};
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {2, 4}, {5, 2}}) {
    const Field& f = field_create(p, a);
    uint64_t q = unitary_q(f);
    for (unsigned k : classical_k(p, q))
      for (const GF& s : s_values(f, k))
        for (int d : d_values(f)) {
          FullCheck fc = check_full(f, s, d, unitary_candidates(f, s, d), Classical::SU4, opt);
          json ev = full_json(fc);
          ev["s"] = s.str();
          rep.claims.push_back({"SU4(" + std::to_string(q * q) + ") k=" + std::to_string(k) + " s=" + s.str() +
                                    " d=" + std::to_string(d) + ": every admissible r4 generates",
                                fc.failures.empty(), true, ev});
        }
  }
  return rep;
}

GeneratorPair su9_pair_26(bool other_root)
{
  const Field& f9 = field_create(3, 2);
  GF xi = xi_root(f9, other_root);
  return make_pair(f9, 6, 1, {xi, xi, xi.pow(7), f9.el(0)});
}

VerifyReport verify_su9_26(const VerifyOptions& opt)
{
  VerifyReport rep{"lemma26", {}};
  for (bool other : {false, true}) {
    GeneratorPair pr = su9_pair_26(other);
    std::string tag = other ? " (second root)" : "";
    VerdictReport v = verdict(pr, Classical::SU4, opt.order);
    rep.claims.push_back({"SU4(9) generated" + tag, v.verdict == Verdict::Full && v.order == 13063680, true,
                          {{"pair", to_json(pr)}, {"order", v.order.str()}, {"verdict", verdict_name(v.verdict)}}});
    std::map<std::string, Matrix> env{{"x", pr.x}, {"y", pr.y}};
    PresentationCheck c = check_assignment(presentation("L34"), {{"S", "y^-1 x y"}, {"T", "(y^2 x)^3"}}, env, opt.order);
    rep.claims.push_back({"x^y, (y^2 x)^3 give PSL3(4)" + tag, c.certified, true,
                          {{"relators_hold", c.relators_hold},
                           {"projective_order", c.projective_order ? c.projective_order->str() : ""}}});
    Matrix w = eval_word("(x y)^2 (x y^2)^4 (x y^5)^2 y^3", env);
    auto w9 = w.pow(9).scalar_value();
    uint64_t lam_order = 0;
    if (w9)
      for (uint64_t e = 1; e <= 8 && !lam_order; e++)
        if (w9->pow(static_cast<int64_t>(e)).is_one())
          lam_order = e;
    rep.claims.push_back({"w^9 is scalar of order 4" + tag, w9.has_value() && lam_order == 4, true,
                          {{"scalar_order", lam_order}}});
  }
  return rep;
}

VerifyReport verify_su4_2(const VerifyOptions& opt)
{
  VerifyReport rep{"su4-2", {}};
  // Exhaustive sweeps at the three exceptions, both d.
  for (auto [q, k] : std::vector<std::pair<uint64_t, unsigned>>{{2, 3}, {3, 3}, {3, 4}}) {
    const Field& f = field_create(q == 2 ? 2 : 3, 2);
    GF s = s_for(f, k);
    for (int d : d_values(f))
      rep.claims.push_back(no_full("no SU4(" + std::to_string(q * q) + ") pair for k=" + std::to_string(k) +
                                       ", d=" + std::to_string(d),
                                   f, k, s, d, Classical::SU4, opt));
  }
  // Existence at q = 2, 4, 5 from the criterion, and q = 3, k = 6 from the explicit pair.
  for (auto [p, a] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {2, 4}, {5, 2}, {3, 2}}) {
    const Field& f = field_create(p, a);
    uint64_t q = unitary_q(f);
    for (unsigned k : classical_k(p, q)) {
      if ((q == 2 && k == 3) || (q == 3 && (k == 3 || k == 4)))
        continue;
      if (q == 3 && k == 6) {
        VerdictReport v = verdict(su9_pair_26(false), Classical::SU4, opt.order);
        rep.claims.push_back({"SU4(9) is (2,6)-generated", v.verdict == Verdict::Full, true, {{"order", v.order.str()}}});
        continue;
      }
      size_t found = 0;
      json tried = json::array();
      for (const GF& s : s_values(f, k))
        for (int d : d_values(f)) {
          auto cands = unitary_candidates(f, s, d);
          if (cands.empty())
            continue;
          VerdictReport v = verdict(make_pair_s(f, s, d, cands.front()), Classical::SU4, opt.order);
          tried.push_back({{"s", s.str()}, {"d", d}, {"r", tuple_str(cands.front())}, {"verdict", verdict_name(v.verdict)}});
          found += v.verdict == Verdict::Full;
        }
      rep.claims.push_back({"SU4(" + std::to_string(q * q) + ") is (2," + std::to_string(k) + ")-generated", found > 0, true,
                            tried});
    }
  }
  // Counting: the criterion leaves some r4 for every admissible k and s when 7 <= q <= 27.
  for (uint64_t q = 7; q <= 27; q++) {
    auto fac = factorize(q);
    if (fac.size() != 1)
      continue;
    uint32_t p = static_cast<uint32_t>(fac[0].first);
    const Field& f = field_create(p, 2 * fac[0].second);
    json counts = json::array();
    bool ok = true;
    for (unsigned k : classical_k(p, q))
      for (const GF& s : s_values(f, k))
        for (int d : d_values(f)) {
          size_t n = unitary_candidates(f, s, d).size();
          ok = ok && n > 0;
          counts.push_back({{"k", k}, {"s", s.str()}, {"d", d}, {"r4", n}});
        }
    rep.claims.push_back({"criterion leaves admissible r4 at q=" + std::to_string(q), ok, true, counts});
  }
  return rep;
}

VerifyReport verify_table5(const VerifyOptions&)
{
  VerifyReport rep{"table5", {}};
  Table5 t = reproduce_table5();
  rep.claims.push_back({"generator mapping", true, false, t.mapping});
  for (const Table5Row& r : t.rows) {
    std::string id = "q=" + std::to_string(r.q) + " d=" + std::to_string(r.d) + " k=" + std::to_string(r.k) + " s=" + r.s;
    json ev{{"computed", r.b}, {"expected", r.expected}};
    if (!r.match()) {
      // Settle each disputed b by computing the group itself.
      const Field& f = field_create(r.q == 5 ? 5 : 2, r.q == 5 ? 2 : 4);
      std::vector<unsigned> diff;
      std::set_symmetric_difference(r.b.begin(), r.b.end(), r.expected.begin(), r.expected.end(),
                                    std::back_inserter(diff));
      GF s;
      for (const GF& c : s_values(f, r.k))
        if (r.k != 5 || r.q != 4)
          s = c;
      json disputed = json::object();
      for (unsigned b : diff) {
        GF r4 = f.generator().pow(b);
        GeneratorPair pr = make_pair_s(f, s, r.d, special(f.el(r.d) * r4.frob(f.degree() / 2), r4));
        UnitaryHypotheses h = unitary_hypotheses(s, r.d, r4);
        VerdictReport v = verdict(pr, Classical::SU4);
        disputed[std::to_string(b)] = {{"verdict", verdict_name(v.verdict)},
                                       {"order", v.order.str()},
                                       {"conditions", {h.q_not_3, h.field, h.cond_i, h.cond_ii, h.cond_iii, h.cond_iv}}};
      }
      ev["disputed"] = disputed;
    }
    rep.claims.push_back({id, r.match(), true, ev});
  }
  return rep;
}

VerifyReport verify_table4(const VerifyOptions& opt)
{
  VerifyReport rep{"table4", {}};
  for (const Table4Witness& w : reproduce_table4(opt)) {
    json ev = w.evidence;
    ev["expectation"] = w.expectation;
    std::string where = w.found ? " over " + w.pair.f().spec_string() : "";
    rep.claims.push_back({"row " + w.row + where, w.pass, true, ev});
  }
  return rep;
}

}  // namespace

VerifyReport verify(const std::string& target, const VerifyOptions& opt)
{
  if (target == "nr-i")
    return verify_nr_i(opt);
  if (target == "nr-ii")
    return verify_nr_ii(opt);
  if (target == "nr-iii")
    return verify_nr_iii(opt);
  if (target == "nr-iv")
    return verify_nr_iv(opt);
  if (target == "sl3-su9-not23")
    return verify_sl3_su9(opt);
  if (target == "sl-not24")
    return verify_sl_not24(opt);
  if (target == "psu-not24")
    return verify_psu_not24(opt);
  if (target == "sl4")
    return verify_sl4(opt);
  if (target == "sp4")
    return verify_sp4(opt);
  if (target == "su4")
    return verify_su4(opt);
  if (target == "su4-2")
    return verify_su4_2(opt);
  if (target == "lemma26")
    return verify_su9_26(opt);
  if (target == "table4")
    return verify_table4(opt);
  if (target == "table5")
    return verify_table5(opt);
  if (target == "tuples-48-54")
    return verify_tuples(opt);
  throw Error(ErrorCode::Parse, "unknown verification target '" + target + "'");
}

}  // namespace clgen
