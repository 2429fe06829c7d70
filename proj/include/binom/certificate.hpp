#pragma once

// Ideal-equality certificates: each derived generator as a polynomial
// combination of the originals, and each original as a combination of the
// derived ones. Replaying both directions exactly proves the two generating
// sets span the same ideal.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "binom/polynomial.hpp"

namespace binom {

/// sum over i of cofactors[i] * gens[i]
struct Combination {
  std::map<std::size_t, Polynomial> cofactors;

  static Combination unit(std::size_t i, std::size_t nvars);
  bool empty() const { return cofactors.empty(); }
  void add_term(std::size_t i, const Monomial& m, const Scalar& c);
  void add(std::size_t i, const Polynomial& cofactor);
  /// this += c * m * o
  Combination& add(const Combination& o, const Scalar& c);
  Combination& add(const Combination& o, const Monomial& m, const Scalar& c);
  Combination scaled(const Scalar& c) const;
  Polynomial evaluate(const std::vector<Polynomial>& gens) const;
  friend bool operator==(const Combination&, const Combination&) = default;
};

/// `c` is over some generators M; `m_over_base[k]` writes M[k] over a base.
/// Returns `c` written over the base.
Combination substitute(const Combination& c, const std::vector<Combination>& m_over_base);

struct Certificate {
  Ring ring;
  std::vector<Polynomial> original;
  std::vector<Polynomial> derived;
  std::vector<Combination> derived_from_original;
  std::vector<Combination> original_from_derived;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

CertificateCheck verify(const Certificate& cert);
Certificate identity_certificate(const PolySystem& sys);
/// a: F -> G, b: G -> H gives F -> H. Throws if a.derived != b.original.
Certificate compose(const Certificate& a, const Certificate& b);

nlohmann::json combination_to_json(const Combination& c, const Ring& ring);
Combination combination_from_json(const nlohmann::json& j, const Ring& ring);
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace binom
