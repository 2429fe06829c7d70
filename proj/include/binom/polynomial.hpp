#pragma once

// Sparse multivariate polynomials over Scalar in the main variables
// x1..xn, and ordered generator systems.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binom/scalar.hpp"

namespace binom {

enum class MonomialOrder { Lex, GrLex, GRevLex };

MonomialOrder parse_order(const std::string& name);  // throws std::invalid_argument
std::string order_name(MonomialOrder order);

/// Dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exponent = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this, when this divides o.
  std::optional<Monomial> quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  /// Storage order (lexicographic on exponent vectors); not a term order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Term-order comparison: <0 if a < b, 0 if equal, >0 if a > b.
int compare(MonomialOrder order, const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of total degree d in n variables, ascending in `order`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d, MonomialOrder order);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Polynomial() = default;
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static Polynomial variable(std::size_t nvars, std::size_t index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() <= 1; }
  bool is_binomial() const { return terms_.size() <= 2; }
  bool is_homogeneous() const;
  /// Max total degree; nothing for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  Scalar coefficient(const Monomial& m) const;

  /// Terms sorted descending in the given order.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms(MonomialOrder order) const;
  std::pair<Monomial, Scalar> leading_term(MonomialOrder order) const;  // requires nonzero

  void add_term(const Monomial& m, const Scalar& c);
  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  /// Leading coefficient normalized to 1 (zero stays zero).
  Polynomial monic(MonomialOrder order) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// x^alpha * f.
inline Polynomial multiply(const Monomial& m, const Polynomial& f) { return f.times(m); }

/// Variable and parameter context shared by a system's polynomials.
struct Ring {
  std::vector<std::string> vars;
  std::vector<std::string> params;
  MonomialOrder order = MonomialOrder::GRevLex;

  std::size_t nvars() const { return vars.size(); }
  std::optional<std::size_t> var_index(const std::string& name) const;
  std::optional<std::size_t> param_index(const std::string& name) const;
  friend bool operator==(const Ring&, const Ring&) = default;
};

struct PolySystem {
  Ring ring;
  std::vector<Polynomial> generators;
  /// Optional generator names (empty, or one per generator).
  std::vector<std::string> labels;

  std::string label(std::size_t i) const;

  /// Drops zero generators.
  PolySystem normalized() const;
  std::uint32_t max_degree() const;
  bool all_homogeneous() const;
  bool all_binomial() const;
  friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

/// Adds a fresh variable and homogenizes each generator to its own degree.
/// Throws std::invalid_argument on a name collision.
PolySystem homogenize(const PolySystem& sys, const std::string& new_var);
Polynomial homogenize(const Polynomial& f, std::size_t var_index);
/// Sets `var` to 1 and removes it from the ring.
PolySystem dehomogenize(const PolySystem& sys, const std::string& var);
Polynomial dehomogenize(const Polynomial& f, std::size_t var_index);

}  // namespace binom
