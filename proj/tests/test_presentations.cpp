#include "doctest.h"

#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"

#include "clgen/presentations.hpp"

using namespace clgen;

namespace {

using Perm = std::vector<int>;

// Permutations act on the right: (a b)(i) = b(a(i)), matching the fixture generator.
struct PermOps {
  size_t n;
  Perm identity() const
  {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
  Perm mul(const Perm& a, const Perm& b) const
  {
    Perm r(n);
    for (size_t i = 0; i < n; i++)
      r[i] = b[a[i]];
    return r;
  }
  Perm inv(const Perm& a) const
  {
    Perm r(n);
    for (size_t i = 0; i < n; i++)
      r[a[i]] = int(i);
    return r;
  }
  Perm neg(const Perm&) const { throw Error(ErrorCode::Parse, "negation of a permutation"); }
};

size_t perm_closure(const std::vector<Perm>& gens, const PermOps& ops)
{
  std::set<Perm> seen{ops.identity()};
  std::vector<Perm> queue{ops.identity()};
  for (size_t i = 0; i < queue.size(); i++)
    for (const Perm& g : gens) {
      Perm h = ops.mul(queue[i], g);
      if (seen.insert(h).second)
        queue.push_back(h);
    }
  return seen.size();
}

nlohmann::json fixtures()
{
  std::ifstream in(std::string(CLGEN_TEST_DATA_DIR) + "/presentation_fixtures.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::array<GF, 4> ints(const Field& f, int a, int b, int c, int d)
{
  return {f.el(a), f.el(b), f.el(c), f.el(d)};
}

Matrix random_invertible(const Field& f, std::mt19937_64& rng)
{
  std::uniform_int_distribution<code_t> pick(0, f.size() - 1);
  while (true) {
    std::vector<code_t> c(16);
    for (auto& v : c)
      v = pick(rng);
    Matrix g(&f, 4, 4, c);
    if (!g.det().is_zero())
      return g;
  }
}

}  // namespace

TEST_CASE("word parser")
{
  const Field& f = field_create(7, 1);
  std::mt19937_64 rng(3);
  std::map<std::string, Matrix> env{{"a", random_invertible(f, rng)}, {"b", random_invertible(f, rng)},
                                    {"T12", random_invertible(f, rng)}};
  const Matrix& a = env["a"];
  const Matrix& b = env["b"];

  CHECK(eval_word("1", env) == Matrix::identity(&f, 4));
  CHECK(eval_word("a b", env) == a * b);
  CHECK(eval_word("a^-2", env) == (a * a).inverse());
  CHECK(eval_word("[a,b]", env) == a.inverse() * b.inverse() * a * b);
  CHECK(eval_word("-a", env) == Matrix::scalar(f.el(-1), 4) * a);
  CHECK(eval_word("(a b)^3 T12", env) == a * b * a * b * a * b * env["T12"]);
  CHECK(eval_word("[a b, b^2]^-1", env) == eval_word("[b^2, a b]", env));

  for (std::string s : {"a b^-1 (a b)^3", "[a,b]^4", "-(a T12)^2 b", "T12^-7 [a b,b]", "1", "(-a) b", "b (-a^2)^3"}) {
    Word w = parse_word(s);
    Word again = parse_word(word_str(w));
    CHECK(word_str(again) == word_str(w));
    CHECK(eval_word(again, env) == eval_word(w, env));
  }
  CHECK(word_str(parse_word("(a)(b)^2")) == "a b^2");
  // Letters are single characters plus digits, so "ab" is a product.
  CHECK(eval_word("ab", env) == a * b);

  for (std::string bad : {"", "(a", "a)", "a^", "a^x", "[a b]", "[a,b", "()", "[,b]", "a ^ 2 )", "3", "a -b"}) {
    INFO(bad);
    CHECK_THROWS_AS(eval_word(bad, env), Error);
  }
  CHECK_THROWS_AS(eval_word("c", env), Error);
}

TEST_CASE("relator lists hold on independent permutation models")
{
  auto fx = fixtures();
  REQUIRE(fx.size() == presentations().size());
  for (const Presentation& pres : presentations()) {
    INFO(pres.id);
    REQUIRE(fx.contains(pres.id));
    const auto& entry = fx[pres.id];
    PermOps ops{entry["degree"].get<size_t>()};
    std::map<std::string, Perm> env;
    std::vector<Perm> gens;
    for (const std::string& g : pres.gens) {
      env[g] = entry["generators"][g].get<Perm>();
      gens.push_back(env[g]);
    }
    for (const std::string& r : pres.relators) {
      INFO(r);
      CHECK(eval_word(parse_word(r), env, ops) == ops.identity());
    }
    CHECK(perm_closure(gens, ops) == pres.target_order);
  }

  // The other grouping of the last PSL3(4) relator fails on the same model.
  const auto& l34 = fx["L34"];
  CHECK(l34["last_relator_readings"]["a"].get<bool>());
  CHECK_FALSE(l34["last_relator_readings"]["b"].get<bool>());
  PermOps ops{21};
  std::map<std::string, Perm> env{{"S", l34["generators"]["S"].get<Perm>()}, {"T", l34["generators"]["T"].get<Perm>()}};
  CHECK(eval_word(parse_word("T (S T)^3 T^2 (S T)^3 (S T (T (S T)^3)^2 T S T)^2"), env, ops) != ops.identity());
}

TEST_CASE("presentation checks on matrices")
{
  const Field& f7 = field_create(7, 1);
  const Presentation& a5 = presentation("A5");
  CHECK_THROWS_AS(presentation("E8"), Error);

  // Generators of the wrong count.
  GeneratorPair alt5 = make_pair(f7, 3, 1, ints(f7, 0, 1, 0, 1));
  try {
    check_presentation(a5, {alt5.x});
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }
  try {
    check_assignment(a5, {{"S", "x"}}, {{"x", alt5.x}, {"y", alt5.y}});
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }

  // Scalar images satisfy every relator but certify nothing.
  Matrix one = Matrix::identity(&f7, 4);
  PresentationCheck trivial = check_presentation(a5, {one, one});
  CHECK(trivial.relators_hold);
  CHECK_FALSE(trivial.nontrivial);
  CHECK_FALSE(trivial.certified);

  PresentationCheck c = check_presentation(a5, {alt5.x, alt5.y});
  CHECK(c.relators_hold);
  CHECK(c.nontrivial);
  REQUIRE(c.projective_order);
  CHECK(*c.projective_order == 60);
  CHECK(c.certified);

  // The same pair fails the PSL2(7) relators.
  PresentationCheck wrong = check_presentation(presentation("L27_a"), {alt5.x, alt5.y});
  CHECK_FALSE(wrong.relators_hold);
  CHECK_FALSE(wrong.failed.empty());
  CHECK_FALSE(wrong.certified);
}

TEST_CASE("quotient identification")
{
  const Field& f7 = field_create(7, 1);

  auto id = identify_quotient(make_pair(f7, 3, 1, ints(f7, 0, 1, 0, 1)));
  REQUIRE(id);
  CHECK(id->name == "Alt(5)");
  CHECK(id->certified);
  CHECK(id->projective_order == 60);

  for (int r4 : {3, 4}) {
    auto l27 = identify_quotient(make_pair(f7, 3, -1, ints(f7, 0, -r4, 0, r4)));
    REQUIRE(l27);
    CHECK(l27->name == "PSL2(7)");
    CHECK(l27->certified);
    CHECK(l27->projective_order == 168);
  }

  // Full groups are not identified as one of the small quotients.
  const Field& f3 = field_create(3, 1);
  CHECK_FALSE(identify_quotient(make_pair(f3, 3, 1, ints(f3, 0, 0, 0, 1))));
}

TEST_CASE("identification is invariant under conjugation and implies a proper subgroup")
{
  const Field& f7 = field_create(7, 1);
  std::mt19937_64 rng(17);
  int certified = 0;
  for (int d : {1, -1})
    for (int r4 = 1; r4 < 7; r4++) {
      GeneratorPair pr;
      try {
        pr = make_pair(f7, 3, d, ints(f7, 0, -r4, 0, r4));
      } catch (const Error&) {
        continue;
      }
      auto id = identify_quotient(pr);
      Matrix g = random_invertible(f7, rng);
      auto conj = identify_quotient(g.inverse() * pr.x * g, g.inverse() * pr.y * g);
      REQUIRE(id.has_value() == conj.has_value());
      if (!id)
        continue;
      CHECK(id->name == conj->name);
      CHECK(id->certified == conj->certified);
      CHECK(id->projective_order == conj->projective_order);
      if (id->certified) {
        certified++;
        CHECK(verdict(pr, Classical::SL4).verdict == Verdict::Proper);
      }
    }
  CHECK(certified > 0);
}

TEST_CASE("PSU4(3) case tables hold for both roots of t^2 - t - 1")
{
  for (bool other : {false, true}) {
    auto results = run_psu_cases("", other);
    CHECK(results.size() == 76);
    std::set<std::string> labels;
    for (const auto& r : results) {
      INFO(r.label << " " << r.tuple << " root " << other);
      labels.insert(r.label);
      CHECK_FALSE(r.claims.empty());
      for (const auto& c : r.claims) {
        INFO(c.kind << ": " << c.evidence);
        CHECK(c.holds);
      }
    }
    CHECK(labels.size() == 12);
  }

  auto only = run_psu_cases("2.2.3");
  REQUIRE(only.size() == 2);
  auto id = identify_quotient(only[0].x, only[0].y);
  REQUIRE(id);
  CHECK(id->order == 128);

  for (const auto& r : run_psu_cases("2.2.6")) {
    auto a7 = identify_quotient(r.x, r.y);
    REQUIRE(a7);
    CHECK(a7->name == "Alt(7)");
    CHECK(a7->certified);
  }
  for (const auto& r : run_psu_cases("2.5.4")) {
    auto a6 = identify_quotient(r.x, r.y);
    REQUIRE(a6);
    CHECK(a6->certified);
    CHECK(a6->projective_order == 720);
    CHECK(a6->index == 2);
  }
}
