#include "binom/certificate.hpp"

#include <stdexcept>

#include "binom/io.hpp"

namespace binom {

Combination Combination::unit(std::size_t i, std::size_t nvars) {
  Combination c;
  c.cofactors[i] = Polynomial::constant(nvars, Scalar(1));
  return c;
}

void Combination::add_term(std::size_t i, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  Polynomial& p = cofactors[i];
  p.add_term(m, c);
  if (p.is_zero()) cofactors.erase(i);
}

void Combination::add(std::size_t i, const Polynomial& cofactor) {
  if (cofactor.is_zero()) return;
  Polynomial& p = cofactors[i];
  p += cofactor;
  if (p.is_zero()) cofactors.erase(i);
}

Combination& Combination::add(const Combination& o, const Scalar& c) {
  if (c.is_zero()) return *this;
  for (const auto& [i, p] : o.cofactors) add(i, p.scaled(c));
  return *this;
}

Combination& Combination::add(const Combination& o, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return *this;
  for (const auto& [i, p] : o.cofactors) add(i, p.times(m, c));
  return *this;
}

Combination Combination::scaled(const Scalar& c) const {
  Combination out;
  out.add(*this, c);
  return out;
}

Polynomial Combination::evaluate(const std::vector<Polynomial>& gens) const {
  Polynomial sum;
  for (const auto& [i, p] : cofactors) {
    if (i >= gens.size()) throw std::out_of_range("combination refers to generator " + std::to_string(i));
    sum += p * gens[i];
  }
  return sum;
}

Combination substitute(const Combination& c, const std::vector<Combination>& m_over_base) {
  Combination out;
  for (const auto& [k, cof] : c.cofactors) {
    if (k >= m_over_base.size()) throw std::out_of_range("combination refers to generator " + std::to_string(k));
    for (const auto& [i, p] : m_over_base[k].cofactors) out.add(i, cof * p);
  }
  return out;
}

CertificateCheck verify(const Certificate& cert) {
  CertificateCheck check;
  auto fail = [&](const std::string& msg) {
    check.ok = false;
    check.failures.push_back(msg);
  };
  if (cert.derived_from_original.size() != cert.derived.size())
    fail("derived_from_original has " + std::to_string(cert.derived_from_original.size()) + " entries for " +
         std::to_string(cert.derived.size()) + " derived generators");
  if (cert.original_from_derived.size() != cert.original.size())
    fail("original_from_derived has " + std::to_string(cert.original_from_derived.size()) + " entries for " +
         std::to_string(cert.original.size()) + " original generators");
  if (!check.ok) return check;
  for (std::size_t i = 0; i < cert.derived.size(); ++i) {
    try {
      if (cert.derived_from_original[i].evaluate(cert.original) != cert.derived[i])
        fail("derived generator " + std::to_string(i + 1) + " does not replay from the originals");
    } catch (const std::out_of_range& e) {
      fail("derived generator " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (std::size_t j = 0; j < cert.original.size(); ++j) {
    try {
      if (cert.original_from_derived[j].evaluate(cert.derived) != cert.original[j])
        fail("original generator " + std::to_string(j + 1) + " does not replay from the derived set");
    } catch (const std::out_of_range& e) {
      fail("original generator " + std::to_string(j + 1) + ": " + e.what());
    }
  }
  return check;
}

Certificate identity_certificate(const PolySystem& sys) {
  Certificate c;
  c.ring = sys.ring;
  c.original = sys.generators;
  c.derived = sys.generators;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    const Combination u = Combination::unit(i, sys.ring.nvars());
    c.derived_from_original.push_back(u);
    c.original_from_derived.push_back(u);
  }
  return c;
}

Certificate compose(const Certificate& a, const Certificate& b) {
  if (a.derived != b.original) throw std::invalid_argument("certificates do not chain");
  Certificate c;
  c.ring = b.ring;
  c.original = a.original;
  c.derived = b.derived;
  for (const auto& comb : b.derived_from_original) c.derived_from_original.push_back(substitute(comb, a.derived_from_original));
  for (const auto& comb : a.original_from_derived) c.original_from_derived.push_back(substitute(comb, b.original_from_derived));
  return c;
}

nlohmann::json combination_to_json(const Combination& c, const Ring& ring) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [i, p] : c.cofactors) out.push_back({{"index", i}, {"cofactor", to_string(p, ring)}});
  return out;
}

Combination combination_from_json(const nlohmann::json& j, const Ring& ring) {
  Combination c;
  for (const auto& e : j) c.add(e.at("index").get<std::size_t>(), parse_polynomial(e.at("cofactor").get<std::string>(), ring));
  return c;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["ring"] = ring_to_json(cert.ring);
  auto polys = [&](const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p, cert.ring));
    return out;
  };
  auto combos = [&](const std::vector<Combination>& cs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cs) out.push_back(combination_to_json(c, cert.ring));
    return out;
  };
  j["original"] = polys(cert.original);
  j["derived"] = polys(cert.derived);
  j["derived_from_original"] = combos(cert.derived_from_original);
  j["original_from_derived"] = combos(cert.original_from_derived);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.ring = ring_from_json(j.at("ring"));
  for (const auto& p : j.at("original")) c.original.push_back(parse_polynomial(p.get<std::string>(), c.ring));
  for (const auto& p : j.at("derived")) c.derived.push_back(parse_polynomial(p.get<std::string>(), c.ring));
  for (const auto& e : j.at("derived_from_original")) c.derived_from_original.push_back(combination_from_json(e, c.ring));
  for (const auto& e : j.at("original_from_derived")) c.original_from_derived.push_back(combination_from_json(e, c.ring));
  return c;
}

}  // namespace binom
