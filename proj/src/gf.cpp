#include "clgen/gf.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "clgen/numtheory.hpp"

namespace clgen {

namespace {

constexpr uint32_t kNoLog = std::numeric_limits<uint32_t>::max();

// Residues modulo a monic polynomial f over F_p, used only while searching
// for canonical moduli (before any Field exists).
class ResidueRing {
 public:
  ResidueRing(uint32_t p, const std::vector<uint32_t>& f) : p_(p), f_(f), n_(f.size() - 1) {}

  std::vector<uint32_t> mul(const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) const
  {
    std::vector<uint64_t> prod(2 * n_, 0);
    for (unsigned i = 0; i < n_; i++) {
      if (x[i] == 0)
        continue;
      for (unsigned j = 0; j < n_; j++)
        prod[i + j] = (prod[i + j] + uint64_t(x[i]) * y[j]) % p_;
    }
    for (unsigned k = 2 * n_ - 1; k >= n_; k--) {
      uint64_t c = prod[k];
      if (c == 0)
        continue;
      prod[k] = 0;
      for (unsigned i = 0; i < n_; i++)
        prod[k - n_ + i] = (prod[k - n_ + i] + (p_ - c) * f_[i]) % p_;
    }
    std::vector<uint32_t> out(n_);
    for (unsigned i = 0; i < n_; i++)
      out[i] = static_cast<uint32_t>(prod[i]);
    return out;
  }

  std::vector<uint32_t> pow(std::vector<uint32_t> x, uint64_t e) const
  {
    std::vector<uint32_t> r = one();
    while (e > 0) {
      if (e & 1)
        r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  std::vector<uint32_t> one() const
  {
    std::vector<uint32_t> r(n_, 0);
    r[0] = 1 % p_;
    return r;
  }

  std::vector<uint32_t> t() const
  {
    std::vector<uint32_t> r(n_, 0);
    if (n_ == 1)
      r[0] = (p_ - f_[0]) % p_;
    else
      r[1] = 1;
    return r;
  }

  // Evaluates the polynomial g (coefficients in F_p, constant first) at u.
  std::vector<uint32_t> eval(const std::vector<uint32_t>& g, const std::vector<uint32_t>& u) const
  {
    std::vector<uint32_t> acc(n_, 0);
    for (size_t k = g.size(); k-- > 0;) {
      acc = mul(acc, u);
      acc[0] = (acc[0] + g[k]) % p_;
    }
    return acc;
  }

 private:
  uint32_t p_;
  std::vector<uint32_t> f_;
  unsigned n_;
};

bool is_primitive(uint32_t p, const std::vector<uint32_t>& f)
{
  unsigned n = f.size() - 1;
  if (f[0] == 0)
    return false;
  uint64_t order = ipow(p, n) - 1;
  ResidueRing ring(p, f);
  auto t = ring.t();
  if (ring.pow(t, order) != ring.one())
    return false;
  for (auto [r, e] : factorize(order)) {
    if (ring.pow(t, order / r) == ring.one())
      return false;
  }
  return true;
}

std::mutex& modulus_mutex()
{
  static std::mutex m;
  return m;
}

std::map<std::pair<uint32_t, unsigned>, std::vector<uint32_t>>& modulus_cache()
{
  static std::map<std::pair<uint32_t, unsigned>, std::vector<uint32_t>> cache;
  return cache;
}

// Least primitive polynomial in the alternating-sign ordering that is
// compatible with the canonical moduli of all proper subfields.
std::vector<uint32_t> search_canonical_modulus(uint32_t p, unsigned a)
{
  std::vector<std::pair<unsigned, std::vector<uint32_t>>> subs;
  for (uint64_t m : divisors(a)) {
    if (m < a)
      subs.emplace_back(m, canonical_modulus(p, m));
  }
  uint64_t total = ipow(p, a);
  std::vector<uint32_t> f(a + 1, 0);
  f[a] = 1;
  for (uint64_t idx = 0; idx < total; idx++) {
    uint64_t rest = idx;
    for (unsigned i = 0; i < a; i++) {
      uint32_t digit = rest % p;
      rest /= p;
      bool negate = ((a - i) % 2) == 1;
      f[i] = negate ? (p - digit) % p : digit;
    }
    if (f[0] == 0 || !is_primitive(p, f))
      continue;
    ResidueRing ring(p, f);
    bool compatible = true;
    for (const auto& [m, g] : subs) {
      uint64_t c = (total - 1) / (ipow(p, m) - 1);
      auto u = ring.pow(ring.t(), c);
      auto val = ring.eval(g, u);
      if (std::any_of(val.begin(), val.end(), [](uint32_t v) { return v != 0; })) {
        compatible = false;
        break;
      }
    }
    if (compatible)
      return f;
  }
  throw Error(ErrorCode::NoPrimitivePolynomial,
              "no primitive modulus for GF(" + std::to_string(p) + "^" + std::to_string(a) + ")");
}

void check_caps(uint32_t p, unsigned a)
{
  if (!is_prime(p))
    throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (a == 0 || a > kMaxDegree)
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(a) + " outside 1.." +
                                               std::to_string(kMaxDegree));
  uint64_t q = 1;
  for (unsigned i = 0; i < a; i++) {
    q *= p;
    if (q > kMaxFieldSize)
      throw Error(ErrorCode::TooLarge, "field size exceeds 2^24");
  }
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::unique_ptr<Field>> fields;
};

Registry& registry()
{
  static Registry r;
  return r;
}

std::string trim(const std::string& s)
{
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    b++;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    e--;
  return s.substr(b, e - b);
}

int64_t parse_int(const std::string& s)
{
  std::string t = trim(s);
  if (t.empty())
    throw Error(ErrorCode::Parse, "empty integer");
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad integer '" + t + "'");
  }
  if (pos != t.size())
    throw Error(ErrorCode::Parse, "bad integer '" + t + "'");
  return v;
}

}  // namespace

const char* error_code_name(ErrorCode code)
{
  switch (code) {
  case ErrorCode::NonPrime: return "NonPrime";
  case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
  case ErrorCode::NoPrimitivePolynomial: return "NoPrimitivePolynomial";
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::FieldMismatch: return "FieldMismatch";
  case ErrorCode::OrderUnavailable: return "OrderUnavailable";
  case ErrorCode::DegenerateY: return "DegenerateY";
  case ErrorCode::EpsilonIsOne: return "EpsilonIsOne";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::InternalMismatch: return "InternalMismatch";
  case ErrorCode::RequiresSpecialization: return "RequiresSpecialization";
  case ErrorCode::ArityMismatch: return "ArityMismatch";
  case ErrorCode::BadCharacteristic: return "BadCharacteristic";
  case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
  case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::vector<uint32_t> canonical_modulus(uint32_t p, unsigned a)
{
  check_caps(p, a);
  {
    std::lock_guard<std::mutex> lock(modulus_mutex());
    auto it = modulus_cache().find({p, a});
    if (it != modulus_cache().end())
      return it->second;
  }
  // The search recurses into subfields, so it runs outside the lock; two
  // threads racing here compute the same deterministic answer.
  auto f = search_canonical_modulus(p, a);
  std::lock_guard<std::mutex> lock(modulus_mutex());
  modulus_cache().emplace(std::make_pair(p, a), f);
  return f;
}

Field::Field(uint32_t p, std::vector<uint32_t> modulus)
    : p_(p), a_(modulus.size() - 1), modulus_(std::move(modulus))
{
  q_ = static_cast<uint32_t>(ipow(p_, a_));
  ppow_.resize(a_ + 1);
  for (unsigned i = 0; i <= a_; i++)
    ppow_[i] = ipow(p_, i);

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, kNoLog);
  std::vector<uint32_t> digits(a_, 0);
  digits[0] = 1;
  for (uint32_t e = 0; e + 1 < q_; e++) {
    code_t c = from_coeffs(digits);
    if (log_[c] != kNoLog)
      throw Error(ErrorCode::NoPrimitivePolynomial, "modulus is not primitive");
    exp_[e] = c;
    log_[c] = e;
    // Multiply by t and reduce with t^a = -(m_0 + ... + m_{a-1} t^{a-1}).
    uint32_t top = digits[a_ - 1];
    for (unsigned i = a_; i-- > 1;)
      digits[i] = digits[i - 1];
    digits[0] = 0;
    if (a_ == 1)
      digits[0] = static_cast<uint32_t>((uint64_t(top) * ((p_ - modulus_[0]) % p_)) % p_);
    else {
      for (unsigned i = 0; i < a_; i++)
        digits[i] = static_cast<uint32_t>((digits[i] + uint64_t(p_ - top) * modulus_[i]) % p_);
    }
  }
  if (from_coeffs(digits) != 1)
    throw Error(ErrorCode::NoPrimitivePolynomial, "modulus is not primitive");

  zech_.assign(q_ - 1, kNoLog);
  for (uint32_t k = 0; k + 1 < q_; k++) {
    code_t c = exp_[k];
    uint32_t c0 = c % p_;
    code_t shifted = c - c0 + (c0 + 1) % p_;
    zech_[k] = shifted == 0 ? kNoLog : log_[shifted];
  }
}

code_t Field::add(code_t x, code_t y) const
{
  if (p_ == 2)
    return x ^ y;
  if (a_ == 1) {
    uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  if (x == 0)
    return y;
  if (y == 0)
    return x;
  uint32_t lx = log_[x], ly = log_[y];
  uint32_t diff = ly >= lx ? ly - lx : ly + (q_ - 1) - lx;
  uint32_t z = zech_[diff];
  if (z == kNoLog)
    return 0;
  uint64_t e = uint64_t(lx) + z;
  return exp_[e % (q_ - 1)];
}

code_t Field::neg(code_t x) const
{
  if (p_ == 2 || x == 0)
    return x;
  if (a_ == 1)
    return p_ - x;
  return exp_[(uint64_t(log_[x]) + (q_ - 1) / 2) % (q_ - 1)];
}

code_t Field::mul(code_t x, code_t y) const
{
  if (x == 0 || y == 0)
    return 0;
  if (a_ == 1)
    return static_cast<code_t>((uint64_t(x) * y) % p_);
  uint32_t e = log_[x] + log_[y];
  if (e >= q_ - 1)
    e -= q_ - 1;
  return exp_[e];
}

code_t Field::inv(code_t x) const
{
  if (x == 0)
    throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  uint32_t l = log_[x];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

code_t Field::pow(code_t x, int64_t e) const
{
  if (x == 0) {
    if (e > 0)
      return 0;
    if (e == 0)
      return 1;
    throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  }
  int64_t m = static_cast<int64_t>(q_) - 1;
  int64_t r = e % m;
  if (r < 0)
    r += m;
  return exp_[(uint64_t(log_[x]) * uint64_t(r)) % uint64_t(m)];
}

code_t Field::from_int(int64_t n) const
{
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0)
    r += p_;
  return static_cast<code_t>(r);
}

uint32_t Field::log(code_t x) const
{
  if (x == 0)
    throw Error(ErrorCode::DivisionByZero, "logarithm of zero");
  return log_[x];
}

code_t Field::frobenius(code_t x, int64_t i) const
{
  if (x == 0)
    return 0;
  int64_t r = i % static_cast<int64_t>(a_);
  if (r < 0)
    r += a_;
  return exp_[(uint64_t(log_[x]) * ppow_[r]) % (q_ - 1)];
}

unsigned Field::min_degree(code_t x) const
{
  for (uint64_t m : divisors(a_)) {
    if (frobenius(x, m) == x)
      return static_cast<unsigned>(m);
  }
  return a_;
}

std::vector<uint32_t> Field::coeffs(code_t x) const
{
  std::vector<uint32_t> c(a_);
  for (unsigned i = 0; i < a_; i++) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

code_t Field::from_coeffs(const std::vector<uint32_t>& c) const
{
  uint64_t v = 0;
  for (size_t i = c.size(); i-- > 0;)
    v = v * p_ + c[i] % p_;
  return static_cast<code_t>(v);
}

std::string Field::str(code_t x) const
{
  if (in_prime_field(x))
    return std::to_string(x);
  return "g^" + std::to_string(log_[x]);
}

code_t Field::parse(const std::string& text) const
{
  std::string s = trim(text);
  if (s.empty())
    throw Error(ErrorCode::Parse, "empty field element");
  bool negative = false;
  if (s[0] == '-' && s.size() > 1 && s[1] == 'g') {
    negative = true;
    s = s.substr(1);
  }
  if (s[0] == 'g') {
    int64_t e = 1;
    if (s.size() > 1) {
      if (s[1] != '^')
        throw Error(ErrorCode::Parse, "bad field element '" + text + "'");
      e = parse_int(s.substr(2));
    }
    code_t v = pow(gen(), e);
    return negative ? neg(v) : v;
  }
  return from_int(parse_int(s));
}

GF Field::el(int64_t n) const { return GF(this, from_int(n)); }

GF Field::wrap(code_t x) const
{
  if (x >= q_)
    throw Error(ErrorCode::Parse, "code out of range");
  return GF(this, x);
}

GF Field::generator() const { return GF(this, gen()); }

const Field& Field::extension(unsigned m) const
{
  return field_create(p_, a_ * m);
}

bool Field::embeds_in(const Field& big) const
{
  return big.p() == p_ && big.degree() % a_ == 0;
}

uint64_t Field::embed_multiplier(const Field& big) const
{
  if (&big == this)
    return 1;
  if (!embeds_in(big))
    throw Error(ErrorCode::FieldMismatch,
                "GF(" + std::to_string(q_) + ") does not embed in GF(" + std::to_string(big.size()) + ")");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = embed_cache_.find(&big);
  if (it != embed_cache_.end())
    return it->second;
  uint64_t c = (uint64_t(big.size()) - 1) / (q_ - 1);
  for (uint64_t j = 1; j < q_ || j == 1; j++) {
    if (gcd_u64(j, q_ - 1) != 1)
      continue;
    code_t root = big.exp(c * j);
    code_t acc = 0;
    for (size_t k = modulus_.size(); k-- > 0;)
      acc = big.add(big.mul(acc, root), big.from_int(modulus_[k]));
    if (acc == 0) {
      embed_cache_.emplace(&big, j);
      return j;
    }
  }
  throw Error(ErrorCode::InternalMismatch, "no embedding found");
}

code_t Field::embed(code_t x, const Field& big) const
{
  if (&big == this)
    return x;
  uint64_t j = embed_multiplier(big);
  if (x == 0)
    return 0;
  uint64_t c = (uint64_t(big.size()) - 1) / (q_ - 1);
  return big.exp((uint64_t(log_[x]) * j % (q_ - 1)) * c);
}

std::optional<code_t> Field::restrict_from(code_t z, const Field& big) const
{
  if (&big == this)
    return z;
  uint64_t j = embed_multiplier(big);
  if (z == 0)
    return code_t(0);
  uint64_t c = (uint64_t(big.size()) - 1) / (q_ - 1);
  uint64_t l = big.log(z);
  if (l % c != 0)
    return std::nullopt;
  uint64_t e = (l / c) * inverse_mod(j, q_ - 1) % (q_ - 1);
  return exp_[e];
}

std::string Field::spec_string() const
{
  std::ostringstream os;
  os << p_ << "^" << a_;
  if (modulus_ != canonical_modulus(p_, a_)) {
    os << ":";
    for (size_t i = 0; i < modulus_.size(); i++)
      os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

void GF::same_field(const GF& o) const
{
  if (f_ != o.f_)
    throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

GF GF::operator+(const GF& o) const
{
  same_field(o);
  return GF(f_, f_->add(v_, o.v_));
}

GF GF::operator-(const GF& o) const
{
  same_field(o);
  return GF(f_, f_->sub(v_, o.v_));
}

GF GF::operator*(const GF& o) const
{
  same_field(o);
  return GF(f_, f_->mul(v_, o.v_));
}

GF GF::operator/(const GF& o) const
{
  same_field(o);
  return GF(f_, f_->div(v_, o.v_));
}

const Field& field_with_modulus(uint32_t p, const std::vector<uint32_t>& modulus)
{
  if (modulus.size() < 2)
    throw Error(ErrorCode::Parse, "modulus must have degree >= 1");
  check_caps(p, modulus.size() - 1);
  std::vector<uint32_t> m(modulus);
  for (auto& c : m)
    c %= p;
  if (m.back() != 1)
    throw Error(ErrorCode::Parse, "modulus must be monic");
  if (!is_primitive(p, m))
    throw Error(ErrorCode::NoPrimitivePolynomial, "modulus is not primitive");
  Registry& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mutex);
  auto key = std::make_pair(p, m);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end())
    return *it->second;
  auto f = std::make_unique<Field>(p, m);
  const Field& ref = *f;
  reg.fields.emplace(key, std::move(f));
  return ref;
}

const Field& field_create(uint32_t p, unsigned a)
{
  return field_with_modulus(p, canonical_modulus(p, a));
}

const Field& parse_field(const std::string& text)
{
  std::string s = trim(text);
  std::string head = s, tail;
  if (auto colon = s.find(':'); colon != std::string::npos) {
    head = s.substr(0, colon);
    tail = s.substr(colon + 1);
  }
  uint32_t p = 0;
  unsigned a = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = static_cast<uint32_t>(parse_int(head.substr(0, caret)));
    a = static_cast<unsigned>(parse_int(head.substr(caret + 1)));
  } else {
    int64_t q = parse_int(head);
    if (q < 2)
      throw Error(ErrorCode::Parse, "bad field size '" + head + "'");
    auto fac = factorize(static_cast<uint64_t>(q));
    if (fac.size() != 1)
      throw Error(ErrorCode::NonPrime, head + " is not a prime power");
    p = static_cast<uint32_t>(fac[0].first);
    a = fac[0].second;
  }
  if (tail.empty())
    return field_create(p, a);
  std::vector<uint32_t> coeffs;
  std::stringstream ss(tail);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int64_t v = parse_int(item);
    int64_t r = v % static_cast<int64_t>(p);
    coeffs.push_back(static_cast<uint32_t>(r < 0 ? r + p : r));
  }
  if (coeffs.size() != a + 1)
    throw Error(ErrorCode::Parse, "modulus needs " + std::to_string(a + 1) + " coefficients");
  return field_with_modulus(p, coeffs);
}

GF root_of_unity(const Field& f, unsigned k)
{
  if (k < 3)
    throw Error(ErrorCode::OrderUnavailable, "k must be at least 3");
  uint32_t p = f.p();
  if (k == p)
    return f.el(1);
  if (k == 2 * p)
    return f.el(-1);
  uint64_t order = f.size() - 1;
  if (k % p == 0 || order % k != 0)
    throw Error(ErrorCode::OrderUnavailable,
                "no primitive " + std::to_string(k) + "-th root of unity in GF(" + std::to_string(f.size()) + ")");
  return f.wrap(f.exp(order / k));
}

unsigned generated_subfield(const Field& f, const std::vector<GF>& elems)
{
  uint64_t deg = 1;
  for (const GF& e : elems) {
    if (e.field_ptr() != &f)
      throw Error(ErrorCode::FieldMismatch, "element outside the field");
    deg = lcm_u64(deg, f.min_degree(e.code()));
  }
  return static_cast<unsigned>(deg);
}

uint64_t count_defective(const Field& f)
{
  uint64_t n = 0;
  for (code_t r = 1; r < f.size(); r++) {
    if (f.min_degree(f.mul(r, r)) != f.degree())
      n++;
  }
  return n;
}

uint64_t defective_bound(uint32_t p, unsigned a)
{
  if (a == 1)
    return 0;
  if (a == 2)
    return 2 * (uint64_t(p) - 1);
  uint64_t g = (p - 1) % 2 == 0 ? 2 : 1;
  return g * p * (ipow(p, a / 2) - 1) / (p - 1);
}

std::vector<GF> sqrts_in_field(const GF& x)
{
  const Field& f = x.field();
  if (x.is_zero())
    return {x};
  uint64_t order = f.size() - 1;
  uint64_t l = f.log(x.code());
  if (f.p() == 2) {
    // Squaring is a bijection; the root is x^(q/2).
    return {x.pow(f.size() / 2)};
  }
  if (l % 2 != 0)
    return {};
  GF r = f.wrap(f.exp(l / 2));
  GF s = f.wrap(f.exp(l / 2 + order / 2));
  return {r, s};
}

SqrtResult sqrt_in_closure(const GF& x)
{
  auto roots = sqrts_in_field(x);
  if (!roots.empty())
    return {roots.front(), true};
  const Field& big = x.field().closure();
  auto ext = sqrts_in_field(x.embed(big));
  if (ext.empty())
    throw Error(ErrorCode::InternalMismatch, "no square root in the quadratic extension");
  return {ext.front(), false};
}

}  // namespace clgen
