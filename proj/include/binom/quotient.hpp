#pragma once

// k[x]/<B> for homogeneous binomials B, one degree at a time: monomials of
// degree d fall into classes (m = scale * rep modulo B) or into the zero
// set. Classes come from a breadth-first search over the graph whose edges
// are the degree-d monomial multiples of B.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binom/certificate.hpp"
#include "binom/polynomial.hpp"

namespace binom {

/// lead - lambda * tail, or the monomial lead when there is no tail.
struct NormalizedBinomial {
  Monomial lead;
  std::optional<std::pair<Monomial, Scalar>> tail;

  /// Throws std::invalid_argument for zero, >2 terms or inhomogeneous input.
  static NormalizedBinomial from_polynomial(const Polynomial& p, MonomialOrder order);
  Polynomial polynomial() const;
  std::uint32_t degree() const { return lead.degree(); }
};

struct ClassRef {
  bool zero = false;
  std::size_t id = 0;
  Scalar scale;  // m = scale * rep(id) modulo B
};

struct ClassVector {
  std::uint32_t degree = 0;
  std::map<std::size_t, Scalar> entries;
};

struct DegreeClasses {
  std::uint32_t degree = 0;
  std::vector<Monomial> reps;                   // class id -> representative
  std::vector<std::vector<Monomial>> members;   // class id -> members, descending
  std::vector<Monomial> zero;                   // descending
  std::unordered_map<Monomial, ClassRef, MonomialHash> map;

  const ClassRef& at(const Monomial& m) const;
  std::size_t class_count() const { return reps.size(); }
};

class QuotientStructure {
 public:
  QuotientStructure(std::size_t nvars, MonomialOrder order);

  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  /// Normalizes and appends; returns its index. Drops cached degrees >= its degree.
  std::size_t add_binomial(const Polynomial& b);
  const std::vector<NormalizedBinomial>& binomials() const { return binomials_; }
  /// lead - lambda*tail as polynomials, index-aligned with binomials().
  const std::vector<Polynomial>& binomial_polynomials() const { return polys_; }

  const DegreeClasses& classes(std::uint32_t d);

  /// m - scale*rep(m) as a combination of binomials(); for a zero monomial,
  /// m itself.
  Combination monomial_certificate(const Monomial& m);

  std::string dump(std::uint32_t d, const Ring& ring);

 private:
  struct TreeEdge {
    std::size_t parent = 0;
    std::size_t binomial = 0;
    Monomial multiplier;
    bool child_is_lead = false;
  };
  struct Slice {
    DegreeClasses classes;
    std::vector<Monomial> monomials;  // descending
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<Scalar> sigma;
    std::vector<std::optional<TreeEdge>> tree;
    std::vector<std::size_t> component;         // monomial -> component
    std::vector<std::size_t> component_root;    // component -> monomial index
    std::vector<std::optional<Combination>> zero_root;  // component -> rep in <B>
    std::map<std::size_t, Combination> path_cache;
  };

  Slice& slice(std::uint32_t d);
  Slice build(std::uint32_t d) const;
  Combination path(Slice& s, std::size_t i) const;

  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<NormalizedBinomial> binomials_;
  std::vector<Polynomial> polys_;
  std::map<std::uint32_t, Slice> cache_;
};

const DegreeClasses& enumerate_classes(QuotientStructure& q, std::uint32_t d);
/// Throws std::invalid_argument on inhomogeneous input.
ClassVector reduce_to_classes(QuotientStructure& q, const Polynomial& f);
/// c1*rep1 + c2*rep2. Throws std::invalid_argument for more than two entries.
Polynomial lift_class_binomial(QuotientStructure& q, const ClassVector& v);

}  // namespace binom
