#include "binom/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace binom {

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "grlex" || name == "deglex") return MonomialOrder::GrLex;
  if (name == "grevlex" || name == "degrevlex") return MonomialOrder::GRevLex;
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::string order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GrLex: return "grlex";
    case MonomialOrder::GRevLex: return "grevlex";
  }
  return "grevlex";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exponent) {
  Monomial m(nvars);
  m.exps_[index] = exponent;
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& o) const {
  if (!divides(o)) return std::nullopt;
  Monomial out = o;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::min(exps_[i], o.exps_[i]);
  return out;
}

int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.nvars();
  if (order != MonomialOrder::Lex) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db ? -1 : 1;
  }
  if (order == MonomialOrder::GRevLex) {
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d, MonomialOrder order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [order](const Monomial& a, const Monomial& b) { return compare(order, a, b) < 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) { return monomial(Monomial(nvars), c); }

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::uint32_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::vector<std::pair<Monomial, Scalar>> Polynomial::sorted_terms(MonomialOrder order) const {
  std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [order](const auto& a, const auto& b) { return compare(order, a.first, b.first) > 0; });
  return out;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (compare(order, it->first, best->first) > 0) best = it;
  return *best;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  p += o;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial p = *this;
  p -= o;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p;
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : o.terms_) p.add_term(m * n, c * d);
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial p;
  for (const auto& [n, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), n * m, c);
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const { return times(m).scaled(c); }

Polynomial Polynomial::monic(MonomialOrder order) const {
  if (is_zero()) return {};
  return scaled(leading_term(order).second.inv());
}

// ---------------------------------------------------------------------------
// Ring / PolySystem

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars.begin());
}

std::optional<std::size_t> Ring::param_index(const std::string& name) const {
  auto it = std::find(params.begin(), params.end(), name);
  if (it == params.end()) return std::nullopt;
  return static_cast<std::size_t>(it - params.begin());
}

std::string PolySystem::label(std::size_t i) const {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return "f" + std::to_string(i + 1);
}

PolySystem PolySystem::normalized() const {
  PolySystem out{ring, {}, {}};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_zero()) continue;
    out.generators.push_back(generators[i]);
    if (!labels.empty()) out.labels.push_back(label(i));
  }
  return out;
}

std::uint32_t PolySystem::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : generators)
    if (auto gd = g.degree()) d = std::max(d, *gd);
  return d;
}

bool PolySystem::all_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_homogeneous(); });
}

bool PolySystem::all_binomial() const {
  return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_binomial(); });
}

Polynomial homogenize(const Polynomial& f, std::size_t var_index) {
  if (f.is_zero()) return {};
  const auto d = *f.degree();
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    Monomial h = m;
    h[var_index] += d - m.degree();
    out.add_term(h, c);
  }
  return out;
}

PolySystem homogenize(const PolySystem& sys, const std::string& new_var) {
  if (sys.ring.var_index(new_var) || sys.ring.param_index(new_var))
    throw std::invalid_argument("homogenizing variable '" + new_var + "' already in use");
  PolySystem out;
  out.ring = sys.ring;
  out.ring.vars.push_back(new_var);
  const std::size_t n = out.ring.nvars();
  for (const auto& g : sys.generators) {
    Polynomial lifted;
    for (const auto& [m, c] : g.terms()) {
      auto e = m.exponents();
      e.push_back(0);
      lifted.add_term(Monomial(std::move(e)), c);
    }
    out.generators.push_back(homogenize(lifted, n - 1));
  }
  out.labels = sys.labels;
  return out;
}

Polynomial dehomogenize(const Polynomial& f, std::size_t var_index) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    auto e = m.exponents();
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var_index));
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

PolySystem dehomogenize(const PolySystem& sys, const std::string& var) {
  auto idx = sys.ring.var_index(var);
  if (!idx) throw std::invalid_argument("unknown variable '" + var + "'");
  PolySystem out;
  out.ring = sys.ring;
  out.ring.vars.erase(out.ring.vars.begin() + static_cast<std::ptrdiff_t>(*idx));
  for (const auto& g : sys.generators) out.generators.push_back(dehomogenize(g, *idx));
  out.labels = sys.labels;
  return out;
}

}  // namespace binom
