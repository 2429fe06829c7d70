#include <random>

#include "doctest.h"

#include "binom/io.hpp"
#include "binom/scalar.hpp"

using namespace binom;

namespace {

const std::vector<std::string> kParams = {"k1", "k2", "k3"};

Scalar S(const std::string& text, const std::vector<std::string>& params = kParams) {
  return parse_scalar(text, params);
}

ParamPoly random_param_poly(std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::uint32_t> exp(0, 2);
  std::vector<ParamPoly::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<ParamMonomial::Factor> f;
    for (std::uint32_t v = 0; v < 3; ++v) f.push_back({v, exp(rng)});
    terms.push_back({ParamMonomial(f), mpq_class(coeff(rng))});
  }
  return ParamPoly::from_terms(terms);
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> small(-9, 9);
  if (kind(rng) == 0) {
    int d = small(rng);
    return Scalar::fraction(small(rng), d == 0 ? 1 : d);
  }
  ParamPoly num = random_param_poly(rng, 3);
  ParamPoly den;
  do den = random_param_poly(rng, 2);
  while (den.is_zero());
  return Scalar(RatFun(num, den));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Scalar::fraction(1, 2) + Scalar::fraction(1, 3) == Scalar::fraction(5, 6));
  CHECK(S("0/7").is_zero());
  CHECK(S("6/4").to_string(kParams) == "3/2");
  CHECK(S("-2/6").to_string(kParams) == "-1/3");
}

TEST_CASE("parameter inverses cancel") {
  CHECK((S("k1/k2") * S("k2/k1")).is_one());
  CHECK((S("k1+k2") * S("k1+k2").inv()).is_one());
}

TEST_CASE("sum of rate constants divides as one scalar") {
  const std::vector<std::string> p = {"k1112", "k1211", "k1213"};
  Scalar c = S("k1112*k1213", p) / S("k1211 + k1213", p);
  CHECK(c.to_string(p) == "k1112*k1213/(k1211 + k1213)");
  CHECK(c * S("k1211 + k1213", p) == S("k1112*k1213", p));
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
  CHECK_FALSE(S("k1").try_div(Scalar(0)).has_value());
  CHECK_THROWS_AS(RatFun(ParamPoly(mpq_class(1)), ParamPoly{}), DivisionByZero);
}

TEST_CASE("ratfun_reduce") {
  SUBCASE("monomial common factor") {
    RatFun f(ParamPoly::variable(0) * ParamPoly::variable(1), ParamPoly::variable(0) * ParamPoly::variable(2));
    CHECK(Scalar(f).to_string(kParams) == "k2/k3");
  }
  SUBCASE("gcd reduction of a difference of squares") {
    const ParamPoly k1 = ParamPoly::variable(0);
    const ParamPoly k2 = ParamPoly::variable(1);
    const ParamPoly num = k1 * k1 - k2 * k2;
    const ParamPoly den = k1 - k2;
    const RatFun reduced = ratfun_reduce(RatFun(num, den), RatFunReduction::Full);
    CHECK(reduced.den() == ParamPoly(mpq_class(1)));
    CHECK(reduced.num() == k1 + k2);
    // multiply back
    CHECK(reduced.num() * den == num * reduced.den());
  }
  SUBCASE("zero canonicalizes to 0/1") {
    const ParamPoly den = ParamPoly::variable(0) + ParamPoly::variable(1);
    const RatFun z(ParamPoly{}, den);
    CHECK(z.num().is_zero());
    CHECK(z.den() == ParamPoly(mpq_class(1)));
  }
  SUBCASE("syntactic mode keeps exactness") {
    set_ratfun_reduction(RatFunReduction::Syntactic);
    Scalar a = S("(k1^2 - k2^2)/(k1 - k2)");
    Scalar b = S("k1 + k2");
    CHECK(a == b);
    CHECK((a - b).is_zero());
    set_ratfun_reduction(RatFunReduction::Full);
  }
}

TEST_CASE("multivariate gcd") {
  const ParamPoly k1 = ParamPoly::variable(0);
  const ParamPoly k2 = ParamPoly::variable(1);
  const ParamPoly k3 = ParamPoly::variable(2);
  const ParamPoly one(mpq_class(1));
  const ParamPoly a = (k1 + k2) * (k1 * k3 - one) * (k2 + k3);
  const ParamPoly b = (k1 + k2) * (k2 + k3) * (k1 - k3 + one);
  CHECK(gcd(a, b) == ((k1 + k2) * (k2 + k3)).monic());
  CHECK(gcd(k1 + one, k2 + one) == one);
  CHECK(gcd(a, ParamPoly{}) == a.monic());
}

TEST_CASE("printing round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Scalar s = random_scalar(rng);
    const std::string text = s.to_string(kParams);
    const Scalar back = S(text);
    CHECK_MESSAGE(back == s, text);
    CHECK(back.to_string(kParams) == text);
  }
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(20151);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar c = random_scalar(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
    if (!a.is_zero()) {
      REQUIRE((a * a.inv()).is_one());
      REQUIRE(a.inv().inv() == a);
    }
    ++checked;
  }
  CHECK(checked == 10000);
}
