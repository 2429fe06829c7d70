#pragma once

// Small Buchberger implementation used only to cross-check verdicts on
// desk-scale inputs. Nothing on the detection path calls into it.

#include <stdexcept>
#include <vector>

#include "binom/certificate.hpp"
#include "binom/polynomial.hpp"

namespace binom {

struct GbGuard {
  std::size_t max_vars = 6;
  std::size_t max_generators = 10;
  std::uint32_t max_degree = 4;
  /// Stop once the intermediate basis grows past this.
  std::size_t max_basis = 400;
  bool enforce = true;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // reduced, monic, sorted by leading monomial descending
  MonomialOrder order = MonomialOrder::GRevLex;
};

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// f = sum quotients[i] * g[i] + remainder, remainder fully reduced.
Division divide(const Polynomial& f, const std::vector<Polynomial>& g, MonomialOrder order);
/// Fully reduced remainder of f modulo g.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, MonomialOrder order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Throws GuardExceeded when the instance is outside the guard.
GroebnerBasis buchberger(const PolySystem& sys, MonomialOrder order, const GbGuard& guard = {});
/// Reduced basis as the derived side of a certificate; cofactors are tracked
/// through every S-polynomial.
Certificate groebner_certificate(const PolySystem& sys, MonomialOrder order, const GbGuard& guard = {});
bool is_binomial_ideal_oracle(const PolySystem& sys, const GbGuard& guard = {});
/// Number of degree-d standard monomials of <binomials>.
std::size_t quotient_dimension_oracle(const PolySystem& binomials, std::uint32_t d, const GbGuard& guard = {});

}  // namespace binom
