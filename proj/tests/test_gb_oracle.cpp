#include <random>

#include "doctest.h"

#include "binom/gb_oracle.hpp"
#include "binom/io.hpp"
#include "random_systems.hpp"

using namespace binom;

namespace {

PolySystem system_of(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  PolySystem s;
  s.ring.vars = vars;
  for (const auto& g : gens) s.generators.push_back(parse_polynomial(g, s.ring));
  return s;
}

std::vector<std::string> names(const GroebnerBasis& gb, const Ring& r) {
  std::vector<std::string> out;
  for (const auto& e : gb.elements) out.push_back(to_string(e, r));
  return out;
}

bool buchberger_criterion(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
      if (!normal_form(s_polynomial(gb.elements[i], gb.elements[j], gb.order), gb.elements, gb.order).is_zero())
        return false;
  return true;
}

}  // namespace

TEST_CASE("buchberger examples") {
  const PolySystem a = system_of({"x", "y", "z", "w"}, {"x - y", "z - w"});
  CHECK(names(buchberger(a, a.ring.order), a.ring) == std::vector<std::string>{"x - y", "z - w"});
  const PolySystem b = system_of({"x", "y", "z"}, {"x^2 + y^2 + z^2"});
  CHECK(names(buchberger(b, b.ring.order), b.ring) == std::vector<std::string>{"x^2 + y^2 + z^2"});
  PolySystem c = system_of({"x", "y"}, {"x*y - 1", "y^2 - 1"});
  c.ring.order = MonomialOrder::Lex;
  const GroebnerBasis gc = buchberger(c, MonomialOrder::Lex);
  CHECK(names(gc, c.ring) == std::vector<std::string>{"x - y", "y^2 - 1"});
  for (const auto& f : c.generators) CHECK(normal_form(f, gc.elements, MonomialOrder::Lex).is_zero());
}

TEST_CASE("binomiality oracle") {
  CHECK(is_binomial_ideal_oracle(system_of({"x", "y", "z", "w"}, {"x - y", "z - w", "x^2 - x*y + x*z - x*w"})));
  CHECK_FALSE(is_binomial_ideal_oracle(system_of({"x", "y", "z"}, {"x^2 + y^2 + z^2"})));
  CHECK(is_binomial_ideal_oracle(system_of({"x"}, {"x"})));
}

TEST_CASE("quotient dimension oracle") {
  CHECK(quotient_dimension_oracle(system_of({"x", "y"}, {"x^2 - y^2"}), 3) == 2);
  CHECK(quotient_dimension_oracle(system_of({"x", "y", "z", "w"}, {}), 1) == 4);
  CHECK(quotient_dimension_oracle(system_of({"x", "y"}, {"x - 2*y"}), 2) == 1);
  CHECK_THROWS_AS(quotient_dimension_oracle(system_of({"x", "y", "z"}, {"x + y + z"}), 1), std::invalid_argument);
}

TEST_CASE("guard") {
  const PolySystem big = system_of({"a", "b", "c", "d", "e", "f", "g"}, {"a - b"});
  CHECK_THROWS_AS(buchberger(big, big.ring.order), GuardExceeded);
  GbGuard off;
  off.enforce = false;
  CHECK(buchberger(big, big.ring.order, off).elements.size() == 1);
  CHECK_THROWS_AS(buchberger(system_of({"x"}, {"x^5"}), MonomialOrder::GRevLex), GuardExceeded);
}

TEST_CASE("output is a reduced basis and binomial input stays binomial") {
  std::mt19937 rng(31);
  for (int it = 0; it < 100; ++it) {
    const PolySystem s = it % 2 ? binom::testing::random_binomial_set(rng) : binom::testing::random_homogeneous_system(rng);
    const GroebnerBasis gb = buchberger(s, s.ring.order);
    CHECK(buchberger_criterion(gb));
    for (const auto& f : s.generators) CHECK(normal_form(f, gb.elements, gb.order).is_zero());
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      std::vector<Polynomial> others = gb.elements;
      others.erase(others.begin() + i);
      // no term of any element is divisible by another leading monomial
      CHECK(normal_form(gb.elements[i], others, gb.order) == gb.elements[i]);
      CHECK(gb.elements[i].leading_term(gb.order).second.is_one());
    }
    if (it % 2) {
      for (const auto& e : gb.elements) CHECK(e.is_binomial());
    }
  }
}
