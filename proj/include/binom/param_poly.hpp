#pragma once

// Polynomials in the symbolic parameters (rate constants) with rational
// coefficients. These are the numerators and denominators of RatFun.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace binom {

/// Sparse parameter monomial: (parameter index, exponent) pairs sorted by
/// index, exponents > 0. Indices refer to the declared parameter list.
class ParamMonomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  ParamMonomial() = default;
  explicit ParamMonomial(std::vector<Factor> factors);
  static ParamMonomial variable(std::uint32_t index, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::uint32_t index) const;

  ParamMonomial operator*(const ParamMonomial& other) const;
  /// Quotient if `divisor` divides this monomial.
  std::optional<ParamMonomial> divide(const ParamMonomial& divisor) const;
  ParamMonomial without(std::uint32_t index) const;

  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

ParamMonomial gcd(const ParamMonomial& a, const ParamMonomial& b);

/// Graded lexicographic comparison; parameter 0 is the largest variable.
/// Returns <0, 0, >0.
int grlex_compare(const ParamMonomial& a, const ParamMonomial& b);

class ParamPoly {
 public:
  using Term = std::pair<ParamMonomial, mpq_class>;

  ParamPoly() = default;
  ParamPoly(const mpq_class& constant);  // NOLINT(implicit)
  static ParamPoly variable(std::uint32_t index);
  /// Terms in any order; merges duplicates and drops zeros.
  static ParamPoly from_terms(std::vector<Term> terms);

  /// Terms sorted descending in grlex; never holds zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant value; only meaningful when is_constant().
  mpq_class constant_value() const;
  const Term& lead() const { return terms_.front(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::uint32_t index) const;
  /// Sorted list of parameter indices that occur.
  std::vector<std::uint32_t> variables() const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scaled(const mpq_class& c) const;
  ParamPoly times(const ParamMonomial& m) const;
  ParamPoly pow(unsigned exponent) const;

  /// Exact quotient, or nothing when `divisor` does not divide.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;
  /// Largest monomial dividing every term.
  ParamMonomial monomial_content() const;
  /// Scale so the grlex-leading coefficient is 1 (zero stays zero).
  ParamPoly monic() const;

  /// Coefficients as a polynomial in parameter `index`: result[k] is the
  /// coefficient of p_index^k.
  std::vector<ParamPoly> coefficients_in(std::uint32_t index) const;
  static ParamPoly from_coefficients(const std::vector<ParamPoly>& coeffs,
                                     std::uint32_t index);

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q (gcd(0, 0) = 0).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace binom
