#include "clgen/grouporder.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "clgen/forms.hpp"
#include "clgen/numtheory.hpp"

namespace clgen {

BSGS::BSGS(const std::vector<Matrix>& gens, const OrderOptions& opt)
{
  if (gens.empty())
    throw Error(ErrorCode::InternalMismatch, "no generators");
  f_ = gens[0].field_ptr();
  n_ = gens[0].rows();
  q_ = f_->size();
  npoints_ = 1;
  for (size_t i = 0; i < n_; i++) {
    if (npoints_ > opt.max_points / q_ + 1)
      throw Error(ErrorCode::TooLarge, "vector space exceeds the point cap");
    npoints_ *= q_;
  }
  if (npoints_ - 1 > opt.max_points)
    throw Error(ErrorCode::TooLarge, "vector space exceeds the point cap");
  bound_ = opt.known_bound;

  if (!bound_) {
    // The generated group lies in GL_n(Q), or in SL_n(Q) if every generator has determinant 1.
    bool det_one = true;
    for (const Matrix& g : gens)
      det_one = det_one && g.det().is_one();
    BigInt o = det_one ? 1 : q_ - 1;
    BigInt qi = q_;
    for (size_t i = 2; i <= n_; i++) {
      o *= qi * (qi * q_ - 1);
      qi *= q_;
    }
    bound_ = o;
  }

  levels_.resize(n_);
  uint64_t place = 1;
  for (size_t i = 0; i < n_; i++) {
    // e_i: coordinate i has code 1.
    levels_[i].point = place;
    place *= q_;
    levels_[i].pos.assign(npoints_, -1);
    levels_[i].pos[levels_[i].point] = 0;
    levels_[i].orbit = {levels_[i].point};
    levels_[i].uinv = {Matrix::identity(f_, n_)};
  }
  for (const Matrix& g : gens) {
    if (g.is_identity())
      continue;
    auto [res, lvl] = sift(g, 0);
    if (lvl < levels_.size())
      add_generator(res, lvl);
  }
  recompute_order();
  random_phase(opt);
  if (order_ != *bound_)
    complete();
}

uint64_t BSGS::apply(const Matrix& g, uint64_t pt) const
{
  code_t v[16];
  for (size_t i = 0; i < n_; i++) {
    v[i] = static_cast<code_t>(pt % q_);
    pt /= q_;
  }
  uint64_t out = 0;
  for (size_t i = n_; i-- > 0;) {
    code_t acc = 0;
    for (size_t j = 0; j < n_; j++)
      if (v[j] != 0)
        acc = f_->add(acc, f_->mul(g.raw(i, j), v[j]));
    out = out * q_ + acc;
  }
  return out;
}

void BSGS::extend_orbit(size_t level, size_t first_new_gen)
{
  Level& L = levels_[level];
  auto visit = [&](size_t idx, uint32_t g) {
    uint64_t img = apply(gens_[g], L.orbit[idx]);
    if (L.pos[img] == -1) {
      L.pos[img] = static_cast<int32_t>(L.orbit.size());
      L.orbit.push_back(img);
      L.uinv.push_back(L.uinv[idx] * inv_[g]);
    }
  };
  // Apply the new generators to the known orbit, then close under all.
  size_t start = L.orbit.size();
  for (size_t idx = 0; idx < start; idx++)
    for (size_t gi = first_new_gen; gi < L.gens.size(); gi++)
      visit(idx, L.gens[gi]);
  for (size_t idx = start; idx < L.orbit.size(); idx++)
    for (uint32_t g : L.gens)
      visit(idx, g);
}

std::pair<Matrix, size_t> BSGS::sift(Matrix g, size_t from) const
{
  for (size_t i = from; i < levels_.size(); i++) {
    const Level& L = levels_[i];
    int32_t at = L.pos[apply(g, L.point)];
    if (at == -1)
      return {g, i};
    if (at != 0)
      g = L.uinv[at] * g;
  }
  return {g, levels_.size()};
}

void BSGS::add_generator(const Matrix& g, size_t level)
{
  uint32_t idx = static_cast<uint32_t>(gens_.size());
  gens_.push_back(g);
  inv_.push_back(g.inverse());
  for (size_t i = 0; i <= level; i++) {
    levels_[i].gens.push_back(idx);
    extend_orbit(i, levels_[i].gens.size() - 1);
  }
}

void BSGS::recompute_order()
{
  order_ = 1;
  for (const Level& L : levels_)
    order_ *= L.orbit.size();
}

void BSGS::random_phase(const OrderOptions& opt)
{
  if (gens_.empty())
    return;
  std::mt19937_64 rng(opt.seed);
  std::vector<Matrix> state;
  while (state.size() < std::max<size_t>(10, gens_.size()))
    state.push_back(gens_[state.size() % gens_.size()]);
  Matrix acc = Matrix::identity(f_, n_);
  auto step = [&] {
    std::uniform_int_distribution<size_t> pick(0, state.size() - 1);
    size_t i = pick(rng), j = pick(rng);
    while (j == i)
      j = pick(rng);
    state[i] = (rng() & 1) ? state[i] * state[j] : state[i] * state[j].inverse();
    acc = acc * state[i];
    return acc;
  };
  for (int w = 0; w < 50; w++)
    step();
  unsigned quiet = 0;
  while (quiet < opt.stall) {
    if (order_ == *bound_)
      return;
    auto [res, lvl] = sift(step(), 0);
    if (lvl < levels_.size()) {
      add_generator(res, lvl);
      recompute_order();
      quiet = 0;
    } else {
      quiet++;
    }
  }
}

void BSGS::complete()
{
  // Deterministic Schreier-Sims check: every Schreier generator of every
  // level must sift through the levels below it. Orbits, transversals and
  // generator lists only grow, so a pair (point, generator) that sifted once
  // stays checked; done[i][oi] counts the checked generators of point oi.
  std::vector<std::vector<uint32_t>> done(levels_.size());
  size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; oi++) {
      if (done[i].size() <= oi)
        done[i].resize(levels_[i].orbit.size(), 0);
      if (done[i][oi] == levels_[i].gens.size())
        continue;
      Matrix u = levels_[i].uinv[oi].inverse();
      for (size_t gi = done[i][oi]; gi < levels_[i].gens.size(); gi++) {
        done[i][oi] = static_cast<uint32_t>(gi + 1);
        const Matrix& s = gens_[levels_[i].gens[gi]];
        int32_t at = levels_[i].pos[apply(s, levels_[i].orbit[oi])];
        Matrix h = levels_[i].uinv[at] * s * u;
        if (h.is_identity())
          continue;
        auto [res, lvl] = sift(h, i + 1);
        if (lvl < levels_.size()) {
          add_generator(res, lvl);
          // Levels up to lvl changed; resume checking from the deepest one.
          i = lvl + 1;
          restarted = true;
          break;
        }
      }
    }
  }
  recompute_order();
  completed_ = true;
}

bool BSGS::contains(const Matrix& g) const
{
  if (g.field_ptr() != f_ || g.rows() != n_ || g.det().is_zero())
    return false;
  return sift(g, 0).second == levels_.size();
}

std::vector<uint64_t> BSGS::orbit_sizes() const
{
  std::vector<uint64_t> out;
  for (const Level& L : levels_)
    out.push_back(L.orbit.size());
  return out;
}

std::string classical_name(Classical c)
{
  switch (c) {
    case Classical::SL4:
      return "SL4";
    case Classical::Sp4:
      return "Sp4";
    case Classical::SU4:
      return "SU4";
  }
  return "?";
}

Classical parse_classical(const std::string& s)
{
  if (s == "SL4" || s == "sl4")
    return Classical::SL4;
  if (s == "Sp4" || s == "sp4")
    return Classical::Sp4;
  if (s == "SU4" || s == "su4")
    return Classical::SU4;
  throw Error(ErrorCode::Parse, "unknown classical group " + s);
}

BigInt classical_order(Classical c, uint64_t q)
{
  BigInt Q = q;
  BigInt q2 = Q * Q, q3 = q2 * Q, q4 = q3 * Q, q6 = q3 * q3;
  switch (c) {
    case Classical::SL4:
      return q6 * (q2 - 1) * (q3 - 1) * (q4 - 1);
    case Classical::Sp4:
      return q4 * (q2 - 1) * (q4 - 1);
    case Classical::SU4:
      return q6 * (q2 - 1) * (q3 + 1) * (q4 - 1);
  }
  return 0;
}

std::vector<GF> scalars_in(const BSGS& g, const std::vector<Matrix>& gens)
{
  const Field& f = g.field();
  bool det_one = true;
  for (const Matrix& m : gens)
    det_one = det_one && m.det().is_one();
  std::vector<GF> out;
  for (code_t c = 1; c < f.size(); c++) {
    GF l = f.wrap(c);
    if (det_one && !l.pow(static_cast<int64_t>(g.dim())).is_one())
      continue;
    if (g.contains(Matrix::scalar(l, g.dim())))
      out.push_back(l);
  }
  return out;
}

GroupReport group_report(const std::vector<Matrix>& gens, const OrderOptions& opt)
{
  BSGS g(gens, opt);
  GroupReport r;
  r.order = g.order();
  r.scalars = scalars_in(g, gens);
  r.scalar_order = r.scalars.size();
  r.projective_order = r.order / r.scalar_order;
  r.completed = g.completed();
  return r;
}

namespace {

using Factored = std::map<uint64_t, unsigned>;

Matrix pow_factored(Matrix g, const Factored& n)
{
  for (auto [r, e] : n)
    for (unsigned i = 0; i < e; i++)
      g = g.pow(static_cast<int64_t>(r));
  return g;
}

// Least divisor m of n (given factored) with pred(g^m).
uint64_t reduce_order(const Matrix& g, Factored n, const std::function<bool(const Matrix&)>& pred)
{
  for (auto& [r, e] : n)
    while (e > 0) {
      e--;
      if (!pred(pow_factored(g, n))) {
        e++;
        break;
      }
    }
  uint64_t out = 1;
  for (auto [r, e] : n)
    for (unsigned i = 0; i < e; i++) {
      if (out > UINT64_MAX / r)
        throw Error(ErrorCode::TooLarge, "element order exceeds 64 bits");
      out *= r;
    }
  return out;
}

}  // namespace

std::pair<uint64_t, uint64_t> element_order(const Matrix& g)
{
  size_t n = g.rows();
  if (n > 4)
    throw Error(ErrorCode::TooLarge, "element_order supports n <= 4");
  if (g.det().is_zero())
    throw Error(ErrorCode::DivisionByZero, "singular matrix");
  const Field& f = g.field();
  uint64_t Q = f.size(), p = f.p();
  // Exponent of GL_n(Q): p^e * lcm(Q^m - 1, m <= n), built from the cyclotomic
  // pieces Q-1, Q+1, Q^2+Q+1, Q^2+1.
  std::vector<uint64_t> pieces{Q - 1, Q + 1, Q * Q + Q + 1, Q * Q + 1};
  std::map<uint64_t, unsigned> primes;
  for (uint64_t piece : pieces)
    for (auto [r, e] : factorize(piece))
      primes[r] = 0;
  Factored bound;
  for (auto [r, unused] : primes) {
    (void)unused;
    if (r == p)
      continue;
    // v_r(Q^m - 1) for m <= n, as the sum over the cyclotomic pieces dividing it.
    unsigned best = 0;
    for (unsigned m = 1; m <= n; m++) {
      unsigned v = 0;
      auto val = [&](uint64_t x) {
        unsigned c = 0;
        while (x % r == 0) {
          x /= r;
          c++;
        }
        return c;
      };
      v += val(Q - 1);
      if (m % 2 == 0)
        v += val(Q + 1);
      if (m == 3)
        v += val(Q * Q + Q + 1);
      if (m == 4)
        v += val(Q * Q + 1);
      best = std::max(best, v);
    }
    if (best > 0)
      bound[r] = best;
  }
  unsigned e = 0;
  for (uint64_t pe = 1; pe < n; pe *= p)
    e++;
  if (e > 0)
    bound[p] = e;
  if (!pow_factored(g, bound).is_identity())
    throw Error(ErrorCode::InternalMismatch, "exponent bound failed");
  uint64_t ord = reduce_order(g, bound, [](const Matrix& m) { return m.is_identity(); });
  uint64_t proj = reduce_order(g, bound, [](const Matrix& m) { return m.scalar_value().has_value(); });
  return {ord, proj};
}

std::string verdict_name(Verdict v)
{
  switch (v) {
    case Verdict::Full:
      return "full";
    case Verdict::Proper:
      return "proper";
    case Verdict::NotContained:
      return "not-contained";
    case Verdict::TooLarge:
      return "too-large";
  }
  return "?";
}

VerdictReport verdict(const GeneratorPair& pr, Classical target, const OrderOptions& opt)
{
  const Field& f = pr.f();
  VerdictReport rep;
  uint64_t q = f.size();
  if (target == Classical::SU4) {
    if (f.degree() % 2 != 0)
      throw Error(ErrorCode::HypothesisNotMet, "SU4 needs a field of even degree");
    q = ipow(f.p(), f.degree() / 2);
  }
  rep.target_order = classical_order(target, q);
  std::vector<Matrix> gens{pr.x, pr.y};
  bool contained = pr.x.det().is_one() && pr.y.det().is_one();
  if (contained && target != Classical::SL4) {
    unsigned sigma = target == Classical::SU4 ? f.degree() / 2 : 0;
    FormKind want = target == Classical::SU4 ? FormKind::Hermitian : FormKind::Skew;
    contained = false;
    for (const auto& sol : solve_forms(gens, sigma, {{f.el(1), f.el(1)}}))
      for (const auto& form : sol.forms)
        contained = contained || form.kind == want;
    // In characteristic 2 the alternating forms are found through the symmetric subspace.
  }
  if (!contained) {
    // The order is not needed to reject the target group.
    rep.verdict = Verdict::NotContained;
    rep.detail = "generators do not lie in " + classical_name(target);
    return rep;
  }
  OrderOptions o = opt;
  o.known_bound = rep.target_order;
  try {
    BSGS g(gens, o);
    rep.order = g.order();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge)
      throw;
    rep.verdict = Verdict::TooLarge;
    rep.detail = e.what();
    return rep;
  }
  if (rep.order == rep.target_order) {
    rep.verdict = Verdict::Full;
  } else {
    rep.verdict = Verdict::Proper;
  }
  return rep;
}

}  // namespace clgen
