#pragma once

// Exact coefficient field: rational numbers, or rational functions in a
// finite list of symbolic parameters. Parameters are treated as
// algebraically independent, so every nonzero parameter polynomial is
// invertible.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "binom/param_poly.hpp"

namespace binom {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// How aggressively RatFun strips common factors. Exactness never depends
/// on this; it only controls the size of intermediate coefficients.
enum class RatFunReduction {
  Full,       ///< multivariate gcd: numerator and denominator coprime
  Syntactic,  ///< monomial content plus exact-division checks only
};

void set_ratfun_reduction(RatFunReduction mode);
RatFunReduction ratfun_reduction();

class RatFun {
 public:
  RatFun() : den_(mpq_class(1)) {}
  RatFun(ParamPoly num, ParamPoly den);  // canonicalizes; throws on den == 0
  explicit RatFun(ParamPoly num) : RatFun(std::move(num), ParamPoly(mpq_class(1))) {}

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  struct Raw {};
  RatFun(ParamPoly num, ParamPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  /// Rescales so the denominator's leading coefficient is 1.
  RatFun canonical_scale() const;
  friend RatFun ratfun_reduce(const RatFun& f, RatFunReduction mode);
  friend class Scalar;

  ParamPoly num_;
  ParamPoly den_;
};

/// Canonical form of num/den under the given reduction mode.
RatFun ratfun_reduce(const RatFun& f, RatFunReduction mode);

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(implicit)
  Scalar(const Rational& v) : value_(v) { std::get<Rational>(value_).canonicalize(); }  // NOLINT
  Scalar(RatFun f);  // NOLINT(implicit)
  static Scalar parameter(std::uint32_t index);
  static Scalar fraction(long num, long den);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  /// Promotes rationals to a constant RatFun.
  RatFun as_ratfun() const;
  /// Sign of a rational value; 0 for non-constant rational functions.
  int rational_sign() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;  // throws DivisionByZero
  std::optional<Scalar> try_div(const Scalar& o) const;

  /// Equality is decided exactly (cross-multiplication when needed).
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Round-trip stable text; `names` are the declared parameters.
  std::string to_string(const std::vector<std::string>& names) const;
  /// True when the printed form needs parentheses as a factor.
  bool needs_parens() const;

 private:
  std::variant<Rational, RatFun> value_;
};

}  // namespace binom
