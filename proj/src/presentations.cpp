#include "clgen/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace clgen {

extern const char* const kPsuCaseJson;

// ---------------------------------------------------------------- words

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip()
  {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      pos++;
  }
  bool at_end()
  {
    skip();
    return pos >= s.size();
  }
  char peek()
  {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what)
  {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  Word product(const std::string& stops)
  {
    Word w;
    w.kind = Word::Kind::Product;
    if (peek() == '-') {
      pos++;
      Word inner = product(stops);
      Word neg;
      neg.kind = Word::Kind::Negate;
      neg.parts.push_back(std::move(inner));
      return neg;
    }
    while (!at_end() && stops.find(peek()) == std::string::npos)
      w.parts.push_back(factor());
    if (w.parts.empty())
      fail("empty word");
    if (w.parts.size() == 1)
      return std::move(w.parts[0]);
    return w;
  }

  Word factor()
  {
    Word atom;
    char c = peek();
    if (c == '(') {
      pos++;
      atom = product(")");
      if (peek() != ')')
        fail("expected ')'");
      pos++;
    } else if (c == '[') {
      pos++;
      atom.kind = Word::Kind::Commutator;
      atom.parts.push_back(product(","));
      if (peek() != ',')
        fail("expected ','");
      pos++;
      atom.parts.push_back(product("]"));
      if (peek() != ']')
        fail("expected ']'");
      pos++;
    } else if (c == '1') {
      pos++;
      atom.kind = Word::Kind::Product;  // identity
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      atom.kind = Word::Kind::Letter;
      for (const char* two : {"xi", "pm", "mp"})
        if (s.compare(pos, 2, two) == 0) {
          atom.name = two;
          pos += 2;
          break;
        }
      if (atom.name.empty()) {
        atom.name = s.substr(pos++, 1);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          atom.name += s[pos++];
      }
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    while (peek() == '^') {
      pos++;
      skip();
      size_t start = pos;
      if (pos < s.size() && s[pos] == '-')
        pos++;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        pos++;
      if (pos == start || (pos == start + 1 && s[start] == '-'))
        fail("expected exponent");
      Word p;
      p.kind = Word::Kind::Power;
      p.exp = std::stoll(s.substr(start, pos - start));
      p.parts.push_back(std::move(atom));
      atom = std::move(p);
    }
    return atom;
  }
};

struct MatrixOps {
  const Field* f;
  size_t n;
  Matrix identity() const { return Matrix::identity(f, n); }
  Matrix mul(const Matrix& a, const Matrix& b) const { return a * b; }
  Matrix inv(const Matrix& a) const { return a.inverse(); }
  Matrix neg(const Matrix& a) const { return a.scale(f->el(-1)); }
};

}  // namespace

Word parse_word(const std::string& text)
{
  Parser p{text};
  Word w = p.product("");
  if (!p.at_end())
    p.fail("trailing input");
  return w;
}

std::string word_str(const Word& w)
{
  switch (w.kind) {
    case Word::Kind::Letter:
      return w.name;
    case Word::Kind::Product: {
      if (w.parts.empty())
        return "1";
      std::string out;
      for (const Word& p : w.parts) {
        if (!out.empty())
          out += " ";
        bool wrap = (p.kind == Word::Kind::Product && p.parts.size() > 1) || p.kind == Word::Kind::Negate;
        out += wrap ? "(" + word_str(p) + ")" : word_str(p);
      }
      return out;
    }
    case Word::Kind::Power: {
      const Word& b = w.parts[0];
      std::string base = b.kind == Word::Kind::Letter || b.kind == Word::Kind::Commutator ? word_str(b)
                                                                                          : "(" + word_str(b) + ")";
      return base + "^" + std::to_string(w.exp);
    }
    case Word::Kind::Commutator:
      return "[" + word_str(w.parts[0]) + "," + word_str(w.parts[1]) + "]";
    case Word::Kind::Negate:
      return "-" + word_str(w.parts[0]);
  }
  return "?";
}

Matrix eval_word(const Word& w, const std::map<std::string, Matrix>& env)
{
  if (env.empty())
    throw Error(ErrorCode::ArityMismatch, "empty environment");
  const Matrix& any = env.begin()->second;
  return eval_word(w, env, MatrixOps{any.field_ptr(), any.rows()});
}

Matrix eval_word(const std::string& w, const std::map<std::string, Matrix>& env)
{
  return eval_word(parse_word(w), env);
}

// -------------------------------------------------------- presentations

namespace {

std::vector<Presentation> build_presentations()
{
  std::vector<Presentation> out;
  out.push_back({"A5", "Alt(5)", {"S", "T"}, {"S^2", "T^3", "(S T)^5"}, 60});
  out.push_back({"L27_a", "PSL2(7)", {"S", "T"}, {"S^2", "T^3", "(S T)^7", "[S,T]^4"}, 168});
  out.push_back({"L27_b", "PSL2(7)", {"S", "T"}, {"S^2", "T^7", "(T S)^3", "(T^4 S)^4"}, 168});
  // The last relator is read as T(ST)^3 T^2 (ST)^3 S (T (T(ST)^3)^2 T S T)^2;
  // the alternative grouping (S T (T(ST)^3)^2 T S T)^2 fails on PSL3(4).
  out.push_back({"L34",
                 "PSL3(4)",
                 {"S", "T"},
                 {"S^2", "T^4", "(S T)^7", "(S T^2)^5", "(T (S T)^3)^7",
                  "T (S T)^3 T^2 (S T)^3 S (T (T (S T)^3)^2 T S T)^2"},
                 20160});
  out.push_back({"A6",
                 "Alt(6)",
                 {"T1", "T2", "T3"},
                 {"T1^2", "T2^2", "T3^2", "(T1 T2)^3", "(T2 T3)^3", "(T1 T3)^4", "(T1 T2 T3)^5"},
                 360});
  Presentation a7{"A7", "Alt(7)", {"T1", "T2", "T3", "T4", "T5"}, {}, 2520};
  auto t = [](int i) { return "T" + std::to_string(i); };
  for (int i = 1; i <= 5; i++)
    a7.relators.push_back(t(i) + "^3");
  for (int i = 1; i <= 4; i++)
    a7.relators.push_back("(" + t(i) + " " + t(i + 1) + ")^2");
  for (int i = 1; i <= 5; i++)
    for (int j = i + 3; j <= 5; j++)
      a7.relators.push_back("[" + t(i) + "," + t(j) + "]");
  for (int i = 1; i <= 3; i++)
    a7.relators.push_back(t(i) + " " + t(i + 1) + "^-1 " + t(i + 2) + " " + t(i) + "^-1 " + t(i + 2) + "^-1");
  out.push_back(a7);
  return out;
}

}  // namespace

const std::vector<Presentation>& presentations()
{
  static const std::vector<Presentation> all = build_presentations();
  return all;
}

const Presentation& presentation(const std::string& id)
{
  for (const Presentation& p : presentations())
    if (p.id == id)
      return p;
  throw Error(ErrorCode::Parse, "unknown presentation " + id);
}

PresentationCheck check_presentation(const Presentation& pres, const std::vector<Matrix>& images,
                                     const OrderOptions& opt)
{
  if (images.size() != pres.gens.size())
    throw Error(ErrorCode::ArityMismatch, pres.id + " takes " + std::to_string(pres.gens.size()) + " generators, got " +
                                              std::to_string(images.size()));
  std::map<std::string, Matrix> env;
  for (size_t i = 0; i < images.size(); i++)
    env.emplace(pres.gens[i], images[i]);
  PresentationCheck out;
  for (const std::string& r : pres.relators)
    if (!eval_word(r, env).scalar_value())
      out.failed.push_back(r);
  out.relators_hold = out.failed.empty();
  for (const Matrix& m : images)
    out.nontrivial = out.nontrivial || !m.scalar_value();
  if (out.relators_hold && out.nontrivial) {
    GroupReport rep = group_report(images, opt);
    out.projective_order = rep.projective_order;
    out.certified = rep.projective_order == pres.target_order;
  }
  return out;
}

PresentationCheck check_assignment(const Presentation& pres, const std::map<std::string, std::string>& assign,
                                   const std::map<std::string, Matrix>& env, const OrderOptions& opt)
{
  if (assign.size() != pres.gens.size())
    throw Error(ErrorCode::ArityMismatch, "assignment arity does not match " + pres.id);
  std::vector<Matrix> images;
  for (const std::string& g : pres.gens) {
    auto it = assign.find(g);
    if (it == assign.end())
      throw Error(ErrorCode::ArityMismatch, "assignment misses generator " + g);
    images.push_back(eval_word(it->second, env));
  }
  return check_presentation(pres, images, opt);
}

std::map<std::string, std::string> a7_words(const std::string& u, const std::string& g1)
{
  std::map<std::string, std::string> out;
  for (int i = 0; i < 5; i++) {
    std::string ui = "(" + u + ")^" + std::to_string(i);
    std::string uinv = "(" + u + ")^" + std::to_string(-i);
    out["T" + std::to_string(i + 1)] = ui + " (" + g1 + ") " + uinv;
  }
  return out;
}

const std::vector<Assignment>& documented_assignments()
{
  static const std::vector<Assignment> all = [] {
    std::vector<Assignment> v;
    v.push_back({"S = x, T = y", "A5", {{"S", "x"}, {"T", "y"}}});
    v.push_back({"S = x, T = y", "L27_a", {{"S", "x"}, {"T", "y"}}});
    v.push_back({"S = x, T = (y x)^2", "L27_b", {{"S", "x"}, {"T", "(y x)^2"}}});
    v.push_back({"S = x, T = y", "L34", {{"S", "x"}, {"T", "y"}}});
    v.push_back({"T = x, x y^-1 x y^2 x y x, y^-1 x y", "A6",
                 {{"T1", "x"}, {"T2", "x y^-1 x y^2 x y x"}, {"T3", "y^-1 x y"}}});
    v.push_back({"T = x, y x y^-1, x y^-1 x y^2 x y x", "A6",
                 {{"T1", "x"}, {"T2", "y x y^-1"}, {"T3", "x y^-1 x y^2 x y x"}}});
    v.push_back({"T = x, y^3 x y^-1 (x y)^2, y^2", "A6",
                 {{"T1", "x"}, {"T2", "y^3 x y^-1 (x y)^2"}, {"T3", "y^2"}}});
    v.push_back({"u = (x y)^2, g1 = (x y^2)^-2", "A7", a7_words("x y x y", "(x y^2)^-2")});
    v.push_back({"u = x y, g1 = (x y x y^-1)^2", "A7", a7_words("x y", "(x y x y^-1)^2")});
    v.push_back({"u = (x y)^-2, g1 = (x y^2)^2", "A7", a7_words("(x y)^-2", "(x y^2)^2")});
    return v;
  }();
  return all;
}

std::optional<Identification> identify_quotient(const Matrix& x, const Matrix& y, const OrderOptions& opt)
{
  GroupReport h;
  try {
    h = group_report({x, y}, opt);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge)
      return std::nullopt;
    throw;
  }
  return identify_quotient(x, y, h, opt);
}

std::optional<Identification> identify_quotient(const Matrix& x, const Matrix& y, const GroupReport& h,
                                                const OrderOptions& opt)
{
  std::map<std::string, Matrix> env{{"x", x}, {"y", y}};
  for (const Assignment& a : documented_assignments()) {
    const Presentation& p = presentation(a.pres);
    PresentationCheck c = check_assignment(p, a.words, env, opt);
    if (!c.certified)
      continue;
    Identification id;
    id.certified = true;
    id.method = "presentation " + p.id + " (" + a.label + ")";
    id.order = h.order;
    id.projective_order = h.projective_order;
    id.index = h.projective_order / *c.projective_order;
    id.name = p.name;
    if (id.index == 2 && p.id == "A6")
      id.name = "Alt(6).2";
    else if (id.index != 1)
      id.name = p.name + " (index " + id.index.str() + ")";
    return id;
  }
  // Orders of the remaining documented exceptional groups: projective orders
  // of the simple quotients, then linear orders of the small soluble groups.
  static const std::vector<std::pair<uint64_t, std::string>> projective{
      {60, "Alt(5)"}, {168, "PSL2(7)"}, {360, "Alt(6)"}, {720, "Alt(6).2"}, {2520, "Alt(7)"}, {20160, "PSL3(4)"}};
  static const std::vector<std::pair<uint64_t, std::string>> linear{
      {128, "2-group of order 2^7"}, {2304, "soluble of order 2^8*3^2"}, {576, "order 2^6*3^2"}};
  for (const auto& [n, name] : projective)
    if (h.projective_order == n)
      return Identification{name, "order", false, h.order, h.projective_order, 1};
  for (const auto& [n, name] : linear)
    if (h.order == n)
      return Identification{name, "order", false, h.order, h.projective_order, 1};
  return std::nullopt;
}

std::optional<Identification> identify_quotient(const GeneratorPair& pr, const OrderOptions& opt)
{
  return identify_quotient(pr.x, pr.y, opt);
}

// ------------------------------------------------------------ case data

bool PsuTupleResult::holds() const
{
  for (const PsuClaimResult& c : claims)
    if (!c.holds)
      return false;
  return !claims.empty();
}

const std::string& psu_case_data()
{
  static const std::string text = kPsuCaseJson;
  return text;
}

namespace {

using nlohmann::json;

GF parse_const(const std::string& text, const GF& xi)
{
  const Field& f = xi.field();
  std::string s = text;
  GF sign = f.el(1);
  if (!s.empty() && s[0] == '-') {
    sign = f.el(-1);
    s = s.substr(1);
  }
  if (s.rfind("xi", 0) == 0) {
    int64_t e = 1;
    if (s.size() > 2) {
      if (s[2] != '^')
        throw Error(ErrorCode::Parse, "bad constant " + text);
      e = std::stoll(s.substr(3));
    }
    return sign * xi.pow(e);
  }
  return sign * f.el(std::stoll(s));
}

std::string join(const std::vector<std::string>& v)
{
  std::string out;
  for (const auto& s : v)
    out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string equality_note(const Matrix& lhs, const Matrix& rhs)
{
  if (lhs == rhs)
    return "exact";
  auto c = (rhs.inverse() * lhs).scalar_value();
  if (c)
    return "up to the scalar " + c->str();
  return "fails";
}

struct CaseRunner {
  const Field& f;
  GF xi;
  const json& doc;
  const OrderOptions& opt;

  std::map<std::string, Matrix> defs_env(const json& defs, std::map<std::string, Matrix> env) const
  {
    const json& d = defs.is_string() ? doc.at(defs.get<std::string>()) : defs;
    for (auto it = d.begin(); it != d.end(); ++it)
      env.insert_or_assign(it.key(), eval_word(it.value().get<std::string>(), env));
    return env;
  }

  PsuClaimResult run(const json& claim, const std::map<std::string, Matrix>& base) const
  {
    PsuClaimResult r;
    r.kind = claim.at("kind").get<std::string>();
    const Matrix& x = base.at("x");
    const Matrix& y = base.at("y");
    if (r.kind == "presentation") {
      const Presentation& p = presentation(claim.at("pres").get<std::string>());
      std::map<std::string, std::string> assign = claim.at("assign").get<std::map<std::string, std::string>>();
      PresentationCheck c = check_assignment(p, assign, base, opt);
      r.holds = c.certified;
      r.evidence = p.id + ": " + (c.relators_hold ? "relators hold" : "failed " + join(c.failed));
      if (c.projective_order)
        r.evidence += ", projective order " + c.projective_order->str();
    } else if (r.kind == "order") {
      BigInt n = BSGS({x, y}, opt).order();
      r.holds = n == claim.at("order").get<uint64_t>();
      r.evidence = "order " + n.str();
    } else if (r.kind == "projective_order") {
      GroupReport g = group_report({x, y}, opt);
      r.holds = g.projective_order == claim.at("order").get<uint64_t>();
      r.evidence = "projective order " + g.projective_order.str() + ", order " + g.order.str();
    } else if (r.kind == "identities") {
      auto env = defs_env(claim.at("defs"), base);
      std::vector<std::string> notes;
      r.holds = true;
      for (const auto& eq : claim.at("equations")) {
        std::string s = eq.get<std::string>();
        size_t at = s.find('=');
        std::string note = equality_note(eval_word(s.substr(0, at), env), eval_word(s.substr(at + 1), env));
        r.holds = r.holds && note == "exact";
        notes.push_back(s + ": " + note);
      }
      r.evidence = join(notes);
    } else if (r.kind == "normal") {
      auto env = defs_env(claim.at("defs"), base);
      std::vector<Matrix> gens;
      for (const auto& g : claim.at("gens"))
        gens.push_back(env.at(g.get<std::string>()));
      if (claim.value("minus_one", false))
        gens.push_back(Matrix::scalar(f.el(-1), 4));
      BSGS n(gens, opt);
      bool normal = true;
      for (const Matrix& g : gens)
        for (const Matrix* c : {&x, &y})
          normal = normal && n.contains(*c * g * c->inverse());
      r.holds = normal && n.order() == claim.at("size").get<uint64_t>();
      r.evidence = "subgroup of order " + n.order().str() + (normal ? ", normal" : ", not normal");
    } else if (r.kind == "a7") {
      std::map<std::string, Matrix> env = base;
      Matrix u = eval_word(claim.at("u").get<std::string>(), env);
      Matrix g = eval_word(claim.at("g1").get<std::string>(), env);
      std::vector<Matrix> gs;
      Matrix ui = u.inverse();
      for (int i = 0; i < 5; i++) {
        env["g" + std::to_string(i + 1)] = g;
        gs.push_back(g);
        g = u * g * ui;
      }
      PresentationCheck c = check_presentation(presentation("A7"), gs, opt);
      for (auto it = doc.at("words").begin(); it != doc.at("words").end(); ++it)
        env[it.key()] = eval_word(it.value().get<std::string>(), env);
      std::string nx = equality_note(x, eval_word(claim.at("x").get<std::string>(), env));
      std::string ny = equality_note(y, eval_word(claim.at("y").get<std::string>(), env));
      r.holds = c.certified && nx != "fails" && ny != "fails";
      r.evidence = std::string("A7 relators ") + (c.relators_hold ? "hold" : "fail: " + join(c.failed));
      if (c.projective_order)
        r.evidence += ", <g> projective order " + c.projective_order->str();
      r.evidence += "; x = " + claim.at("x").get<std::string>() + ": " + nx;
      r.evidence += "; y = " + claim.at("y").get<std::string>() + ": " + ny;
    } else if (r.kind == "a6") {
      auto env = defs_env(claim.at("defs"), base);
      std::vector<Matrix> ts;
      for (const char* t : {"T1", "T2", "T3"})
        ts.push_back(eval_word(claim.at(t).get<std::string>(), env));
      PresentationCheck c = check_presentation(presentation("A6"), ts, opt);
      r.holds = c.certified;
      r.evidence = std::string("A6 relators ") + (c.relators_hold ? "hold" : "fail: " + join(c.failed));
      if (c.projective_order)
        r.evidence += ", projective order " + c.projective_order->str();
    } else {
      throw Error(ErrorCode::Parse, "unknown claim kind " + r.kind);
    }
    return r;
  }
};

}  // namespace

std::vector<PsuTupleResult> run_psu_cases(const std::string& label_prefix, bool other_root, const OrderOptions& opt)
{
  const Field& f = field_create(3, 2);
  Poly m(&f, std::vector<int64_t>{-1, -1, 1});
  std::vector<GF> roots = poly_roots(m);
  if (roots.size() != 2)
    throw Error(ErrorCode::InternalMismatch, "t^2 - t - 1 must split over F9");
  std::sort(roots.begin(), roots.end(), [&](const GF& a, const GF& b) { return f.log(a.code()) < f.log(b.code()); });
  GF xi = roots[other_root ? 1 : 0];

  json doc = json::parse(psu_case_data());
  CaseRunner runner{f, xi, doc, opt};
  std::vector<PsuTupleResult> out;
  for (const json& c : doc.at("cases")) {
    std::string label = c.at("label").get<std::string>();
    if (label.rfind(label_prefix, 0) != 0)
      continue;
    const json& shape = c.at("shape");
    bool by_a = c.at("param").get<std::string>() == "a";
    for (const json& row : c.at("rows")) {
      bool signed_row = row.value("signed", true);
      for (const json& t : row.at("tuples")) {
        std::vector<int> signs = signed_row ? std::vector<int>{1, -1} : std::vector<int>{row.value("sign", 1)};
        for (int sign : signs) {
          std::array<GF, 4> v;
          std::string printed;
          for (size_t i = 0; i < 4; i++) {
            v[i] = parse_const(t.at(i).get<std::string>(), xi);
            if (signed_row)
              v[i] = v[i] * f.el(sign);
            printed += (i ? "," : "") + t.at(i).get<std::string>();
          }
          printed = (signed_row ? (sign > 0 ? "+(" : "-(") : "(") + printed + ")";
          std::array<GF, 4> r = v;
          if (by_a) {
            // r3 = a1 xi^3, r4 = a3 + a4 xi^2, r1 = -a3 + a4 xi^2 - a1 xi^3, r2 = -a3 - a4 xi^2 + a2 xi
            GF x2 = xi.pow(2), x3 = xi.pow(3);
            r = {-v[2] + v[3] * x2 - v[0] * x3, -v[2] - v[3] * x2 + v[1] * xi, v[0] * x3, v[2] + v[3] * x2};
          }
          Matrix y(Matrix::identity(&f, 4));
          std::string ys = shape.at("y").get<std::string>();
          y.set(0, 0, xi);
          y.set(1, 1, xi.pow(3));
          y.set(0, 2, r[0]);
          y.set(0, 3, r[1]);
          y.set(1, 2, r[2]);
          y.set(1, 3, r[3]);
          if (ys == "y1") {
            GF a = parse_const(shape.at("a").get<std::string>(), xi);
            GF b = parse_const(shape.at("b").get<std::string>(), xi);
            y.set(2, 2, a);
            y.set(2, 3, b);
            y.set(3, 3, -a - f.el(1));
          } else {
            GF cc = parse_const(shape.at("c").get<std::string>(), xi);
            y.set(2, 2, cc);
            y.set(2, 3, f.el(1) - cc - cc * cc);
            y.set(3, 2, f.el(1));
            y.set(3, 3, -cc - f.el(1));
          }
          std::map<std::string, Matrix> env{{"x", pair_x(f, 1)},
                                            {"y", y},
                                            {"xi", Matrix::scalar(xi, 4)},
                                            {"pm", Matrix::scalar(f.el(sign), 4)},
                                            {"mp", Matrix::scalar(f.el(-sign), 4)}};
          PsuTupleResult res;
          res.label = label;
          res.tuple = printed;
          res.sign = sign;
          res.x = env.at("x");
          res.y = y;
          for (const json& claim : row.at("claims"))
            res.claims.push_back(runner.run(claim, env));
          out.push_back(std::move(res));
        }
      }
    }
  }
  return out;
}

}  // namespace clgen
