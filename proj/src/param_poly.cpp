#include "binom/param_poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace binom {

// ---------------------------------------------------------------------------
// ParamMonomial

ParamMonomial::ParamMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
}

ParamMonomial ParamMonomial::variable(std::uint32_t index, std::uint32_t exponent) {
  ParamMonomial m;
  if (exponent > 0) m.factors_.push_back({index, exponent});
  return m;
}

std::uint32_t ParamMonomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t ParamMonomial::exponent(std::uint32_t index) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{index, 0});
  return (it != factors_.end() && it->first == index) ? it->second : 0;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& other) const {
  ParamMonomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<ParamMonomial> ParamMonomial::divide(const ParamMonomial& divisor) const {
  ParamMonomial out;
  auto a = factors_.begin();
  for (const auto& d : divisor.factors_) {
    while (a != factors_.end() && a->first < d.first) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != d.first || a->second < d.second) return std::nullopt;
    if (a->second > d.second) out.factors_.push_back({a->first, a->second - d.second});
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  return out;
}

ParamMonomial ParamMonomial::without(std::uint32_t index) const {
  ParamMonomial out;
  for (const auto& f : factors_)
    if (f.first != index) out.factors_.push_back(f);
  return out;
}

ParamMonomial gcd(const ParamMonomial& a, const ParamMonomial& b) {
  std::vector<ParamMonomial::Factor> out;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() && j != b.factors().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      out.push_back({i->first, std::min(i->second, j->second)});
      ++i;
      ++j;
    }
  }
  return ParamMonomial(std::move(out));
}

int grlex_compare(const ParamMonomial& a, const ParamMonomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  for (; i != a.factors().end() && j != b.factors().end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
  }
  if (i == a.factors().end() && j == b.factors().end()) return 0;
  return i == a.factors().end() ? -1 : 1;
}

// ---------------------------------------------------------------------------
// ParamPoly

namespace {

bool term_greater(const ParamPoly::Term& x, const ParamPoly::Term& y) {
  return grlex_compare(x.first, y.first) > 0;
}

}  // namespace

ParamPoly::ParamPoly(const mpq_class& constant) {
  if (sgn(constant) != 0) terms_.push_back({ParamMonomial{}, constant});
}

ParamPoly ParamPoly::variable(std::uint32_t index) {
  ParamPoly p;
  p.terms_.push_back({ParamMonomial::variable(index), mpq_class(1)});
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  ParamPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

mpq_class ParamPoly::constant_value() const {
  return terms_.empty() ? mpq_class(0) : terms_.front().second;
}

std::uint32_t ParamPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

std::uint32_t ParamPoly::degree_in(std::uint32_t index) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(index));
  return d;
}

std::vector<std::uint32_t> ParamPoly::variables() const {
  std::vector<std::uint32_t> vars;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c;
    if (a == terms_.end())
      c = -1;
    else if (b == o.terms_.end())
      c = 1;
    else
      c = grlex_compare(a->first, b->first);
    if (c > 0) {
      out.terms_.push_back(*a++);
    } else if (c < 0) {
      out.terms_.push_back(*b++);
    } else {
      mpq_class s = a->second + b->second;
      if (sgn(s) != 0) out.terms_.push_back({a->first, std::move(s)});
      ++a;
      ++b;
    }
  }
  return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return scaled(o.constant_value());
  if (is_constant()) return o.scaled(constant_value());
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& x : terms_)
    for (const auto& y : o.terms_) products.push_back({x.first * y.first, x.second * y.second});
  return from_terms(std::move(products));
}

ParamPoly ParamPoly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

ParamPoly ParamPoly::times(const ParamMonomial& m) const {
  ParamPoly p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;  // multiplying by a monomial preserves grlex order
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
  ParamPoly result(mpq_class(1));
  ParamPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("ParamPoly division by zero");
  if (divisor.is_constant()) return scaled(mpq_class(1) / divisor.constant_value());
  if (divisor.is_monomial()) {
    ParamPoly q;
    for (const auto& t : terms_) {
      auto m = t.first.divide(divisor.lead().first);
      if (!m) return std::nullopt;
      q.terms_.push_back({*m, t.second / divisor.lead().second});
    }
    return q;
  }
  std::vector<Term> quotient;
  ParamPoly rem = *this;
  const auto& dl = divisor.lead();
  while (!rem.is_zero()) {
    const auto& rl = rem.lead();
    auto m = rl.first.divide(dl.first);
    if (!m) return std::nullopt;
    mpq_class c = rl.second / dl.second;
    ParamPoly step = divisor.times(*m).scaled(c);
    quotient.push_back({*m, c});
    rem = rem - step;
  }
  return from_terms(std::move(quotient));
}

ParamMonomial ParamPoly::monomial_content() const {
  if (terms_.empty()) return {};
  ParamMonomial g = terms_.front().first;
  for (const auto& t : terms_) {
    g = gcd(g, t.first);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  return scaled(mpq_class(1) / lead().second);
}

std::vector<ParamPoly> ParamPoly::coefficients_in(std::uint32_t index) const {
  std::vector<std::vector<Term>> buckets(degree_in(index) + 1);
  for (const auto& t : terms_) buckets[t.first.exponent(index)].push_back({t.first.without(index), t.second});
  std::vector<ParamPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

ParamPoly ParamPoly::from_coefficients(const std::vector<ParamPoly>& coeffs, std::uint32_t index) {
  std::vector<Term> terms;
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) {
    const ParamMonomial shift = ParamMonomial::variable(index, k);
    for (const auto& t : coeffs[k].terms()) terms.push_back({t.first * shift, t.second});
  }
  return from_terms(std::move(terms));
}

namespace {

void print_monomial(std::ostream& os, const ParamMonomial& m, const std::vector<std::string>& names) {
  bool first = true;
  for (const auto& [idx, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << (idx < names.size() ? names[idx] : "p" + std::to_string(idx));
    if (e > 1) os << '^' << e;
  }
}

}  // namespace

std::string ParamPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    mpq_class a = abs(c);
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      print_monomial(os, m, names);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Multivariate gcd: recursive primitive PRS over Q[params].

namespace {

ParamPoly univariate_prem(std::vector<ParamPoly> a, const std::vector<ParamPoly>& b,
                          std::uint32_t index) {
  auto trim = [](std::vector<ParamPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  const ParamPoly& lcb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const ParamPoly lca = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lcb;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = a[k + shift] - lca * b[k];
    trim(a);
  }
  return ParamPoly::from_coefficients(a, index);
}

ParamPoly content_in(const ParamPoly& p, std::uint32_t index) {
  ParamPoly g;
  for (const auto& c : p.coefficients_in(index)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(mpq_class(1));
  }
  return g;
}

ParamPoly primitive_part(const ParamPoly& p, std::uint32_t index) {
  ParamPoly c = content_in(p, index);
  if (c.is_constant()) return p.monic();
  auto q = p.divide_exact(c);
  assert(q);
  return q->monic();
}

ParamPoly gcd_nonmonomial(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_constant() || b.is_constant()) return ParamPoly(mpq_class(1));
  if (a == b) return a.monic();
  if (a.terms().size() <= b.terms().size() && a.total_degree() <= b.total_degree()) {
    if (b.divide_exact(a)) return a.monic();
  } else if (b.total_degree() <= a.total_degree() && a.divide_exact(b)) {
    return b.monic();
  }
  const auto va = a.variables();
  const auto vb = b.variables();
  for (auto v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd(content_in(a, v), b);
  for (auto v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd(a, content_in(b, v));

  // Both depend on exactly the same parameters; recurse on the one of
  // smallest combined degree.
  std::uint32_t index = va.front();
  std::uint32_t best = a.degree_in(index) + b.degree_in(index);
  for (auto v : va) {
    const auto d = a.degree_in(v) + b.degree_in(v);
    if (d < best) {
      best = d;
      index = v;
    }
  }
  const ParamPoly cont = gcd(content_in(a, index), content_in(b, index));
  ParamPoly p = primitive_part(a, index);
  ParamPoly q = primitive_part(b, index);
  if (p.degree_in(index) < q.degree_in(index)) std::swap(p, q);
  while (true) {
    ParamPoly r = univariate_prem(p.coefficients_in(index), q.coefficients_in(index), index);
    if (r.is_zero()) break;
    if (r.degree_in(index) == 0) {
      q = ParamPoly(mpq_class(1));
      break;
    }
    p = std::move(q);
    q = primitive_part(r, index);
  }
  return (cont * q).monic();
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const ParamMonomial ma = a.monomial_content();
  const ParamMonomial mb = b.monomial_content();
  const ParamMonomial mg = gcd(ma, mb);
  ParamPoly ra = ma.is_one() ? a : *a.divide_exact(ParamPoly::from_terms({{ma, mpq_class(1)}}));
  ParamPoly rb = mb.is_one() ? b : *b.divide_exact(ParamPoly::from_terms({{mb, mpq_class(1)}}));
  ParamPoly g = gcd_nonmonomial(ra, rb);
  return g.times(mg).monic();
}

}  // namespace binom
