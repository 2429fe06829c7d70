#include "binom/gb_oracle.hpp"

#include <algorithm>
#include <deque>

#include "binom/certificate.hpp"

namespace binom {

namespace {

std::pair<Monomial, Scalar> lead(const Polynomial& p, MonomialOrder order) {
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (compare(order, it->first, best->first) > 0) best = it;
  return *best;
}

void check_guard(const PolySystem& sys, const GbGuard& guard) {
  if (!guard.enforce) return;
  if (sys.ring.nvars() > guard.max_vars)
    throw GuardExceeded("more than " + std::to_string(guard.max_vars) + " variables");
  if (sys.generators.size() > guard.max_generators)
    throw GuardExceeded("more than " + std::to_string(guard.max_generators) + " generators");
  if (sys.max_degree() > guard.max_degree)
    throw GuardExceeded("generator degree above " + std::to_string(guard.max_degree));
}

}  // namespace

Division divide(const Polynomial& f, const std::vector<Polynomial>& g, MonomialOrder order) {
  std::vector<std::pair<Monomial, Scalar>> leads;
  for (const auto& p : g) leads.push_back(lead(p, order));
  Division out;
  out.quotients.assign(g.size(), Polynomial());
  Polynomial p = f;
  while (!p.is_zero()) {
    const auto [m, c] = lead(p, order);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!leads[i].first.divides(m)) continue;
      const Monomial q = *leads[i].first.quotient_of(m);
      const Scalar k = c / leads[i].second;
      p -= g[i].times(q, k);
      out.quotients[i].add_term(q, k);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, MonomialOrder order) {
  return divide(f, g, order).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const auto [mf, cf] = lead(f, order);
  const auto [mg, cg] = lead(g, order);
  const Monomial l = mf.lcm(mg);
  return f.times(*mf.quotient_of(l), cf.inv()) - g.times(*mg.quotient_of(l), cg.inv());
}

namespace {

// combos[i] writes g[i] over the input generators; left empty when not tracking
GroebnerBasis run_buchberger(const PolySystem& sys, MonomialOrder order, const GbGuard& guard,
                             std::vector<Combination>* combos) {
  check_guard(sys, guard);
  const std::size_t n = sys.ring.nvars();
  std::vector<Polynomial> g;
  std::vector<Combination> track;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    const Polynomial& f = sys.generators[i];
    if (f.is_zero()) continue;
    const Scalar c = lead(f, order).second;
    g.push_back(f.scaled(c.inv()));
    if (combos) track.push_back(Combination::unit(i, n).scaled(c.inv()));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    const auto [mi, ci] = lead(g[i], order);
    const auto [mj, cj] = lead(g[j], order);
    // coprime leading monomials: the S-polynomial reduces to zero
    if (mi.gcd(mj).is_one()) continue;
    const Monomial l = mi.lcm(mj);
    const Monomial ui = *mi.quotient_of(l), uj = *mj.quotient_of(l);
    const Polynomial s = g[i].times(ui, ci.inv()) - g[j].times(uj, cj.inv());
    const Division d = divide(s, g, order);
    if (d.remainder.is_zero()) continue;
    const Scalar c = lead(d.remainder, order).second;
    g.push_back(d.remainder.scaled(c.inv()));
    if (combos) {
      Combination h;
      h.add(track[i], ui, ci.inv());
      h.add(track[j], uj, -cj.inv());
      for (std::size_t k = 0; k < d.quotients.size(); ++k)
        for (const auto& [m, q] : d.quotients[k].terms()) h.add(track[k], m, -q);
      track.push_back(h.scaled(c.inv()));
    }
    if (guard.enforce && g.size() > guard.max_basis) throw GuardExceeded("intermediate basis too large");
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // minimal, then reduced
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial mi = lead(g[i], order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial mj = lead(g[j], order).first;
      redundant = mj.divides(mi) && (!(mj == mi) || j < i);
    }
    if (!redundant) minimal.push_back(i);
  }
  std::vector<std::pair<Polynomial, Combination>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    std::vector<std::size_t> other_index;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) {
        others.push_back(g[minimal[b]]);
        other_index.push_back(minimal[b]);
      }
    const Polynomial& p = g[minimal[a]];
    const auto lt = lead(p, order);
    Polynomial tail = p;
    tail.add_term(lt.first, -lt.second);
    const Division d = divide(tail, others, order);
    Polynomial r = d.remainder;
    r.add_term(lt.first, lt.second);
    Combination h;
    if (combos) {
      h = track[minimal[a]];
      for (std::size_t k = 0; k < d.quotients.size(); ++k)
        for (const auto& [m, q] : d.quotients[k].terms()) h.add(track[other_index[k]], m, -q);
      h = h.scaled(lt.second.inv());
    }
    reduced.emplace_back(r.scaled(lt.second.inv()), std::move(h));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const auto& a, const auto& b) {
    return compare(order, lead(a.first, order).first, lead(b.first, order).first) > 0;
  });
  GroebnerBasis out;
  out.order = order;
  for (auto& [p, h] : reduced) {
    out.elements.push_back(std::move(p));
    if (combos) combos->push_back(std::move(h));
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const PolySystem& sys, MonomialOrder order, const GbGuard& guard) {
  return run_buchberger(sys, order, guard, nullptr);
}

Certificate groebner_certificate(const PolySystem& sys, MonomialOrder order, const GbGuard& guard) {
  Certificate cert;
  cert.ring = sys.ring;
  cert.original = sys.generators;
  cert.derived = run_buchberger(sys, order, guard, &cert.derived_from_original).elements;
  for (const auto& f : sys.generators) {
    const Division d = divide(f, cert.derived, order);
    if (!d.remainder.is_zero()) throw std::logic_error("input generator does not reduce to zero modulo its basis");
    Combination c;
    for (std::size_t k = 0; k < d.quotients.size(); ++k)
      if (!d.quotients[k].is_zero()) c.add(k, d.quotients[k]);
    cert.original_from_derived.push_back(c);
  }
  return cert;
}

bool is_binomial_ideal_oracle(const PolySystem& sys, const GbGuard& guard) {
  for (const auto& e : buchberger(sys, sys.ring.order, guard).elements)
    if (!e.is_binomial()) return false;
  return true;
}

std::size_t quotient_dimension_oracle(const PolySystem& binomials, std::uint32_t d, const GbGuard& guard) {
  for (const auto& b : binomials.generators)
    if (!b.is_binomial() || !b.is_homogeneous()) throw std::invalid_argument("expected homogeneous binomials");
  const GroebnerBasis gb = buchberger(binomials, binomials.ring.order, guard);
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(binomials.ring.nvars(), d, binomials.ring.order)) {
    bool standard = true;
    for (const auto& e : gb.elements)
      if (lead(e, gb.order).first.divides(m)) {
        standard = false;
        break;
      }
    count += standard;
  }
  return count;
}

}  // namespace binom
