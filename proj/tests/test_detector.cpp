#include <random>
#include <set>

#include "doctest.h"

#include "binom/detector.hpp"
#include "binom/gb_oracle.hpp"
#include "binom/io.hpp"
#include "binom/linalg.hpp"
#include "binom/quotient.hpp"
#include "random_systems.hpp"

using namespace binom;

namespace {

PolySystem system_of(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  PolySystem s;
  s.ring.vars = vars;
  for (const auto& g : gens) s.generators.push_back(parse_polynomial(g, s.ring));
  return s;
}

std::vector<std::string> names(const std::vector<Polynomial>& ps, const Ring& r) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, r));
  return out;
}

}  // namespace

TEST_CASE("a zero generator in the quotient is absorbed") {
  const PolySystem s = system_of({"x", "y", "z", "w"}, {"x - y", "z - w", "x^2 - x*y + x*z - x*w"});
  const DetectionResult r = detect_binomial_homogeneous(s);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(names(r.binomials, s.ring) == std::vector<std::string>{"x - y", "z - w"});
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].degree == 1);
  CHECK(r.trace[0].new_binomials == 2);
  CHECK(r.trace[1].degree == 2);
  CHECK(r.trace[1].absorbed == std::vector<std::size_t>{2});
  CHECK(r.trace[1].rank == 0);
  REQUIRE(r.certificate);
  CHECK(verify(*r.certificate).ok);
}

TEST_CASE("sum of three squares is refused") {
  const PolySystem s = system_of({"x", "y", "z"}, {"x^2 + y^2 + z^2"});
  const DetectionResult r = detect_binomial_homogeneous(s);
  CHECK(r.verdict == Verdict::No);
  REQUIRE(r.witness);
  CHECK(r.witness->degree == 2);
  CHECK(r.witness->row.size() == 3);
  CHECK_FALSE(r.certificate);
}

TEST_CASE("isolated linear binomial reduces the quadric") {
  const PolySystem s = system_of({"x", "y", "z"}, {"x - y", "x^2 + y^2 + z^2"});
  const DetectionResult r = detect_binomial_homogeneous(s);
  CHECK(r.verdict == Verdict::Yes);
  REQUIRE(r.binomials.size() == 2);
  CHECK(r.binomials[0] == parse_polynomial("x - y", s.ring));
  CHECK(r.binomials[1].scaled(Scalar(2)) == parse_polynomial("2*x^2 + z^2", s.ring));
  CHECK(verify(*r.certificate).ok);
}

TEST_CASE("trivial inputs") {
  const DetectionResult empty = detect_binomial_homogeneous(system_of({"x"}, {}));
  CHECK(empty.verdict == Verdict::Yes);
  CHECK(empty.binomials.empty());
  const DetectionResult tri = detect_binomial_homogeneous(system_of({"x", "y", "z"}, {"x + y + z"}));
  CHECK(tri.verdict == Verdict::No);
  CHECK(tri.witness->row.size() == 3);
  const DetectionResult zero = detect_binomial_homogeneous(system_of({"x", "y"}, {"0", "x - y"}));
  CHECK(zero.verdict == Verdict::Yes);
  CHECK(verify(*zero.certificate).ok);
  const DetectionResult unit = detect_binomial_homogeneous(system_of({"x", "y"}, {"3", "x^2 + x*y + y^2"}));
  CHECK(unit.verdict == Verdict::Yes);
  CHECK(verify(*unit.certificate).ok);
}

TEST_CASE("inhomogeneous input names the generator") {
  PolySystem s = system_of({"x", "y"}, {"x - y", "x^2 - y"});
  s.labels = {"g1", "g2"};
  try {
    detect_binomial_homogeneous(s);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("g2") != std::string::npos);
  }
}

TEST_CASE("detection result JSON round-trips") {
  for (const auto& gens : std::vector<std::vector<std::string>>{{"x - y", "x^2 + y^2 + z^2"}, {"x^2 + y^2 + z^2"}}) {
    const PolySystem s = system_of({"x", "y", "z"}, gens);
    const DetectionResult r = detect_binomial_homogeneous(s);
    CHECK(detection_from_json(detection_to_json(r)) == r);
  }
}

TEST_CASE("extend_with_monomial_multiples") {
  SUBCASE("obfuscated quadric never gets a partitioning basis up to degree four") {
    const PolySystem s = system_of({"x", "y", "z"}, {"x - y + x^2 + y^2 + z^2", "x^2 + y^2 + z^2"});
    for (std::uint32_t bound = 2; bound <= 4; ++bound)
      CHECK_FALSE(pkb_test(linearize(extend_with_monomial_multiples(s, bound))).ok());
  }
  SUBCASE("bound equal to the degree") {
    const PolySystem s = system_of({"x", "y", "z"}, {"x^2 - y*z", "x*y"});
    CHECK(extend_with_monomial_multiples(s, 2) == s);
    CHECK_THROWS_AS(extend_with_monomial_multiples(s, 1), std::invalid_argument);
  }
  SUBCASE("linear binomial times variables") {
    const PolySystem s = system_of({"x", "y", "z"}, {"x - y"});
    const PolySystem e = extend_with_monomial_multiples(s, 2);
    CHECK(e.generators.size() == 4);
    const Polynomial want = parse_polynomial("x^2 - x*y", s.ring);
    CHECK(std::find(e.generators.begin(), e.generators.end(), want) != e.generators.end());
    CHECK(pkb_test(linearize(e)).ok());
  }
}

TEST_CASE("verdicts agree with the reduced Groebner basis") {
  std::mt19937 rng(8128);
  int yes = 0, no = 0;
  for (int it = 0; it < 300; ++it) {
    const PolySystem s = binom::testing::random_homogeneous_system(rng);
    const DetectionResult r = detect_binomial_homogeneous(s);
    const bool oracle = is_binomial_ideal_oracle(s);
    REQUIRE_MESSAGE((r.verdict == Verdict::Yes) == oracle, format_system(s));
    if (r.verdict == Verdict::Yes) {
      ++yes;
      REQUIRE(verify(*r.certificate).ok);
      for (const auto& b : r.binomials) CHECK(b.is_binomial());
      // every input reduces to zero in the final quotient
      QuotientStructure q(s.ring.nvars(), s.ring.order);
      for (const auto& b : r.binomials) q.add_binomial(b);
      for (const auto& f : s.generators) CHECK(reduce_to_classes(q, f).entries.empty());
    } else {
      ++no;
      CHECK(r.witness->row.size() >= 3);
    }
    std::set<std::uint32_t> degrees;
    for (const auto& f : s.generators)
      if (!f.is_zero()) degrees.insert(*f.degree());
    CHECK(r.trace.size() <= degrees.size());
  }
  MESSAGE("yes=" << yes << " no=" << no);
  CHECK(yes >= 20);
  CHECK(no >= 20);
}

TEST_CASE("class counts agree with standard monomials") {
  std::mt19937 rng(1729);
  for (int it = 0; it < 120; ++it) {
    const PolySystem b = binom::testing::random_binomial_set(rng);
    QuotientStructure q(b.ring.nvars(), b.ring.order);
    for (const auto& p : b.generators) q.add_binomial(p);
    for (std::uint32_t d = 0; d <= 4; ++d) REQUIRE(q.classes(d).class_count() == quotient_dimension_oracle(b, d));
  }
}
