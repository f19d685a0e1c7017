#include "clgen/cli.hpp"

#include <algorithm>
#include <chrono>

#include "clgen/forms.hpp"
#include "clgen/linalg.hpp"
#include "clgen/numtheory.hpp"
#include "clgen/presentations.hpp"

namespace clgen {

using nlohmann::json;

std::string class_kind_name(ClassKind k)
{
  switch (k) {
    case ClassKind::Reducible:
      return "Reducible";
    case ClassKind::SubfieldDefined:
      return "SubfieldDefined";
    case ClassKind::FixesForm:
      return "FixesForm";
    case ClassKind::Exceptional:
      return "Exceptional";
    case ClassKind::FullGroup:
      return "FullGroup";
    case ClassKind::Undetermined:
      return "Undetermined";
  }
  return "?";
}

namespace {

std::vector<std::string> strs(const std::vector<GF>& v)
{
  std::vector<std::string> out;
  for (const GF& g : v)
    out.push_back(g.str());
  return out;
}

bool all_one(const std::vector<GF>& m)
{
  return std::all_of(m.begin(), m.end(), [](const GF& g) { return g.is_one(); });
}

json form_json(const InvariantForm& f)
{
  return {{"kind", form_kind_name(f.kind)},
          {"multipliers", strs(f.multipliers)},
          {"sigma_power", f.sigma_power},
          {"gram", f.J.str_rows()}};
}

// The stage-1 witness: a proper invariant subspace over the evaluation field.
json reducible_witness(const GeneratorPair& pr, const Field& e)
{
  std::vector<Matrix> gens{pr.x.embed(e), pr.y.embed(e)};
  for (unsigned dim = 1; dim <= 3; dim++) {
    std::optional<Matrix> w;
    try {
      w = invariant_subspace(gens, dim);
    } catch (const Error&) {
      return nullptr;
    }
    if (w)
      return {{"dim", dim}, {"basis", w->str_rows()}};
  }
  return nullptr;
}

}  // namespace

std::string ambient_name(Classical c, const Field& f)
{
  uint64_t q = f.size();
  return classical_name(c) + "(" + std::to_string(q) + ")";
}

Classical ambient_group(const GeneratorPair& pr)
{
  bool hermitian = false;
  for (const InvariantForm& f : pair_forms(pr)) {
    if (!all_one(f.multipliers))
      continue;
    if (f.kind == FormKind::Skew)
      return Classical::Sp4;
    hermitian = hermitian || f.kind == FormKind::Hermitian;
  }
  return hermitian ? Classical::SU4 : Classical::SL4;
}

Classification classify(const GeneratorPair& pr, const OrderOptions& opt)
{
  const Field& f = pr.f();
  Classification out;
  json& ev = out.evidence;

  // C1/C3: reducibility.
  ReducibilityReport red = reducibility(pr);
  ev["reducibility"] = {{"reducible", red.reducible},
                        {"eval_field", red.eval_field->spec_string()},
                        {"cond_i", red.cond_i_hits},
                        {"cond_ii", red.cond_ii_hits}};
  if (red.specialized)
    ev["reducibility"]["special"] = {{"cond_i", red.special_i_hits}, {"cond_ii", red.special_ii_hits}};
  if (red.reducible) {
    if (red.eval_field->size() <= 16)
      ev["reducibility"]["witness"] = reducible_witness(pr, *red.eval_field);
    out.kind = ClassKind::Reducible;
    out.detail = red.cond_i_hits.empty() && red.special_i_hits.empty() ? "condition (ii)" : "condition (i)";
    return out;
  }

  // C5: the field generated by traces, and by the entries themselves.
  unsigned lower = field_lower_bound(pr);
  std::vector<GF> entries{pr.s, pr.d_el(), pr.r[0], pr.r[1], pr.r[2], pr.r[3]};
  unsigned entry_deg = generated_subfield(f, entries);
  ev["field"] = {{"degree", f.degree()}, {"trace_field_degree", lower}, {"entry_field_degree", entry_deg}};
  if (entry_deg < f.degree()) {
    out.kind = ClassKind::SubfieldDefined;
    out.detail = "entries lie in GF(" + std::to_string(ipow(f.p(), entry_deg)) + ")";
    return out;
  }

  // C8/C4/C7: invariant forms decide the ambient classical group.
  ClassicFlags flags = classic_necessary(pr);
  ev["classic_necessary"] = {{"co_csp", flags.co_csp}, {"cu", flags.cu}};
  std::vector<InvariantForm> forms = pair_forms(pr);
  json fj = json::array();
  Classical ambient = Classical::SL4;
  std::string form_conclusion;
  bool hermitian = false, skew = false;
  for (const InvariantForm& form : forms) {
    fj.push_back(form_json(form));
    bool unit = all_one(form.multipliers);
    if (form.kind == FormKind::Skew && unit)
      skew = true;
    else if (form.kind == FormKind::Hermitian && unit)
      hermitian = true;
    else if (form_conclusion.empty())
      form_conclusion = form_kind_name(form.kind) + " (multipliers " +
                        (form.multipliers.empty() ? "" : form.multipliers[0].str()) +
                        (form.multipliers.size() > 1 ? "," + form.multipliers[1].str() : "") + ")";
  }
  if (skew)
    ambient = Classical::Sp4;
  else if (hermitian)
    ambient = Classical::SU4;
  uint64_t q = ambient == Classical::SU4 ? ipow(f.p(), f.degree() / 2) : f.size();
  BigInt target = classical_order(ambient, q);
  std::string name = ambient_name(ambient, f);
  ev["forms"] = fj;
  ev["ambient"] = name;

  // C6/S: exceptional rows (r1 = r3 = 0 only).
  std::vector<std::string> rows;
  if (pr.specialized())
    for (const std::string& id : exceptional_match(pr))
      if (!exceptional_row(id).reducible)
        rows.push_back(id);
  ev["exceptional_rows"] = rows;
  if (!form_conclusion.empty() && rows.empty()) {
    out.kind = ClassKind::FixesForm;
    out.detail = form_conclusion;
    return out;
  }

  // Order of H, bounded by the ambient group.
  OrderOptions o = opt;
  o.known_bound = target;
  GroupReport rep;
  try {
    rep = group_report({pr.x, pr.y}, o);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge)
      throw;
    ev["order"] = {{"error", e.what()}};
    out.kind = rows.empty() ? ClassKind::Undetermined : ClassKind::Exceptional;
    out.detail = rows.empty() ? "order computation capped" : "rows " + rows.front() + " (order not computed)";
    return out;
  }
  ev["order"] = {{"order", rep.order.str()},
                 {"scalars", rep.scalar_order},
                 {"projective_order", rep.projective_order.str()},
                 {"target_order", target.str()},
                 {"completed", rep.completed}};
  bool full = rep.order == target;

  std::optional<Identification> id;
  if (!full) {
    id = identify_quotient(pr.x, pr.y, rep, opt);
    if (id)
      ev["identification"] = {{"name", id->name},
                              {"method", id->method},
                              {"certified", id->certified},
                              {"index", id->index.str()}};
  }

  if (full) {
    out.kind = ClassKind::FullGroup;
    out.detail = name;
  } else if (id || !rows.empty()) {
    out.kind = ClassKind::Exceptional;
    out.detail = id ? id->name : "";
    for (const std::string& r : rows)
      out.detail += (out.detail.empty() ? "row " : "; row ") + r;
  } else if (!form_conclusion.empty()) {
    out.kind = ClassKind::FixesForm;
    out.detail = form_conclusion;
  } else if (lower < f.degree()) {
    out.kind = ClassKind::SubfieldDefined;
    out.detail = "trace field GF(" + std::to_string(ipow(f.p(), lower)) + "), order " + rep.order.str();
  } else {
    out.kind = ClassKind::Exceptional;
    out.detail = "unidentified proper subgroup of " + name + ", order " + rep.order.str();
  }
  return out;
}

Constraint parse_constraint(const std::string& s)
{
  if (s == "r2=0")
    return Constraint::R2Zero;
  if (s == "r2=-r4")
    return Constraint::R2MinusR4;
  if (s == "r2=d*r4^q" || s == "r2=dr4^q" || s == "unitary")
    return Constraint::R2Unitary;
  if (s == "all")
    return Constraint::All;
  throw Error(ErrorCode::Parse, "unknown constraint '" + s + "' (r2=0, r2=-r4, r2=d*r4^q, all)");
}

std::string constraint_name(Constraint c)
{
  switch (c) {
    case Constraint::R2Zero:
      return "r2=0";
    case Constraint::R2MinusR4:
      return "r2=-r4";
    case Constraint::R2Unitary:
      return "r2=d*r4^q";
    case Constraint::All:
      return "all";
  }
  return "?";
}

std::vector<std::array<GF, 4>> sweep_tuples(const Field& f, int d, Constraint c)
{
  std::vector<std::array<GF, 4>> out;
  GF zero = f.el(0);
  if (c == Constraint::All) {
    if (f.size() > 9)
      throw Error(ErrorCode::TooLarge, "the 'all' sweep is limited to fields of size at most 9");
    uint32_t n = f.size();
    for (uint32_t code = 0; code < n * n * n * n; code++) {
      uint32_t v = code;
      std::array<GF, 4> r;
      for (auto& e : r) {
        e = f.wrap(v % n);
        v /= n;
      }
      out.push_back(r);
    }
    return out;
  }
  if (c == Constraint::R2Unitary && f.degree() % 2 != 0)
    throw Error(ErrorCode::HypothesisNotMet, "r2 = d r4^q needs a field of even degree");
  for (code_t c4 = 0; c4 < f.size(); c4++) {
    GF r4 = f.wrap(c4);
    GF r2 = zero;
    if (c == Constraint::R2MinusR4)
      r2 = -r4;
    else if (c == Constraint::R2Unitary)
      r2 = f.el(d) * r4.frob(f.degree() / 2);
    out.push_back({zero, r2, zero, r4});
  }
  return out;
}

unsigned thread_count(unsigned requested)
{
  if (requested)
    return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::vector<SweepRecord> sweep(const Field& f, const GF& s, int d, Constraint c, const SweepOptions& opt)
{
  auto tuples = sweep_tuples(f, d, c);
  std::vector<SweepRecord> out(tuples.size());
  parallel_for(tuples.size(), opt.threads, [&](size_t i) {
    SweepRecord& rec = out[i];
    rec.r = tuples[i];
    auto t0 = std::chrono::steady_clock::now();
    try {
      rec.pair = make_pair_s(f, s, d, rec.r);
      rec.constructed = true;
    } catch (const Error& e) {
      rec.error = e.what();
      return;
    }
    rec.cls = classify(rec.pair, opt.order);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  });
  return out;
}

std::vector<SweepRecord> sweep(const Field& f, unsigned k, int d, Constraint c, const SweepOptions& opt)
{
  // The s of make_pair's default eps for k.
  GF s = make_pair(f, k, d, {f.el(0), f.el(0), f.el(0), f.el(1)}).s;
  return sweep(f, s, d, c, opt);
}

json to_json(const GeneratorPair& pr)
{
  return {{"field", pr.f().spec_string()},
          {"k", pr.k},
          {"d", pr.d},
          {"s", pr.s.str()},
          {"r", {pr.r[0].str(), pr.r[1].str(), pr.r[2].str(), pr.r[3].str()}}};
}

json to_json(const Classification& c)
{
  return {{"verdict", class_kind_name(c.kind)}, {"detail", c.detail}, {"evidence", c.evidence}};
}

json to_json(const SweepRecord& r)
{
  json j;
  if (!r.constructed) {
    j["r"] = {r.r[0].str(), r.r[1].str(), r.r[2].str(), r.r[3].str()};
    j["skipped"] = r.error;
    return j;
  }
  j["pair"] = to_json(r.pair);
  j["classification"] = to_json(r.cls);
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace clgen
