#include "binom/quotient.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "binom/io.hpp"

namespace binom {

NormalizedBinomial NormalizedBinomial::from_polynomial(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial is not a binomial generator");
  if (!p.is_binomial()) throw std::invalid_argument("polynomial has more than two terms");
  const auto terms = p.sorted_terms(order);
  NormalizedBinomial b;
  b.lead = terms[0].first;
  if (terms.size() == 2) {
    if (terms[1].first.degree() != b.lead.degree()) throw std::invalid_argument("binomial is not homogeneous");
    b.tail = std::make_pair(terms[1].first, -(terms[1].second / terms[0].second));
  }
  return b;
}

Polynomial NormalizedBinomial::polynomial() const {
  Polynomial p = Polynomial::monomial(lead);
  if (tail) p.add_term(tail->first, -tail->second);
  return p;
}

const ClassRef& DegreeClasses::at(const Monomial& m) const {
  auto it = map.find(m);
  if (it == map.end()) throw std::out_of_range("monomial not in this degree");
  return it->second;
}

QuotientStructure::QuotientStructure(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

std::size_t QuotientStructure::add_binomial(const Polynomial& b) {
  NormalizedBinomial nb = NormalizedBinomial::from_polynomial(b, order_);
  if (nb.lead.nvars() != nvars_) throw std::invalid_argument("binomial lives in a different ring");
  cache_.erase(cache_.lower_bound(nb.degree()), cache_.end());
  polys_.push_back(nb.polynomial());
  binomials_.push_back(std::move(nb));
  return binomials_.size() - 1;
}

const DegreeClasses& QuotientStructure::classes(std::uint32_t d) { return slice(d).classes; }

QuotientStructure::Slice& QuotientStructure::slice(std::uint32_t d) {
  auto it = cache_.find(d);
  if (it == cache_.end()) it = cache_.emplace(d, build(d)).first;
  return it->second;
}

namespace {

struct Adjacent {
  std::size_t other;
  std::size_t binomial;
  Monomial multiplier;
  bool self_is_lead;
};

}  // namespace

QuotientStructure::Slice QuotientStructure::build(std::uint32_t d) const {
  Slice s;
  s.classes.degree = d;
  s.monomials = monomials_of_degree(nvars_, d, order_);
  std::reverse(s.monomials.begin(), s.monomials.end());
  const std::size_t n = s.monomials.size();
  for (std::size_t i = 0; i < n; ++i) s.index.emplace(s.monomials[i], i);

  std::vector<std::vector<Adjacent>> adj(n);
  std::vector<std::optional<std::pair<std::size_t, Monomial>>> seed(n);
  for (std::size_t j = 0; j < binomials_.size(); ++j) {
    const NormalizedBinomial& b = binomials_[j];
    if (b.degree() > d) continue;
    for (const Monomial& w : monomials_of_degree(nvars_, d - b.degree(), order_)) {
      const std::size_t u = s.index.at(w * b.lead);
      if (!b.tail) {
        if (!seed[u]) seed[u] = std::make_pair(j, w);
        continue;
      }
      const std::size_t v = s.index.at(w * b.tail->first);
      Polynomial edge = Polynomial::monomial(s.monomials[u]);
      edge.add_term(s.monomials[v], -b.tail->second);
      if (edge != polys_[j].times(w)) throw std::logic_error("edge is not a multiple of its binomial");
      adj[u].push_back({v, j, w, true});
      adj[v].push_back({u, j, w, false});
    }
  }

  s.sigma.assign(n, Scalar());
  s.tree.assign(n, std::nullopt);
  s.component.assign(n, n);
  struct Conflict {
    std::size_t lead_node, tail_node, binomial;
    Monomial multiplier;
  };
  std::vector<std::optional<Conflict>> conflicts;
  std::vector<std::optional<std::size_t>> seeds;
  std::vector<std::vector<std::size_t>> nodes;

  for (std::size_t root = 0; root < n; ++root) {
    if (s.component[root] != n) continue;
    const std::size_t c = s.component_root.size();
    s.component_root.push_back(root);
    conflicts.emplace_back();
    seeds.emplace_back();
    nodes.emplace_back();
    s.sigma[root] = Scalar(1);
    s.component[root] = c;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      nodes[c].push_back(u);
      if (seed[u] && !seeds[c]) seeds[c] = u;
      for (const Adjacent& a : adj[u]) {
        const Scalar& lambda = binomials_[a.binomial].tail->second;
        // w*lead = lambda * w*tail
        const Scalar expected = a.self_is_lead ? s.sigma[u] / lambda : s.sigma[u] * lambda;
        if (s.component[a.other] == n) {
          s.component[a.other] = c;
          s.sigma[a.other] = expected;
          s.tree[a.other] = TreeEdge{u, a.binomial, a.multiplier, !a.self_is_lead};
          queue.push_back(a.other);
        } else if (!conflicts[c] && !(s.sigma[a.other] == expected)) {
          conflicts[c] = a.self_is_lead ? Conflict{u, a.other, a.binomial, a.multiplier}
                                        : Conflict{a.other, u, a.binomial, a.multiplier};
        }
      }
    }
    std::sort(nodes[c].begin(), nodes[c].end());
  }

  const std::size_t ncomp = s.component_root.size();
  s.zero_root.assign(ncomp, std::nullopt);
  std::vector<std::size_t> class_of(ncomp, n);
  for (std::size_t c = 0; c < ncomp; ++c) {
    const std::size_t root = s.component_root[c];
    if (seeds[c]) {
      // t = w*b_j is in <B>, and t - sigma_t*rep is a path certificate
      const std::size_t t = *seeds[c];
      Combination rep;
      rep.add_term(seed[t]->first, seed[t]->second, Scalar(1));
      rep.add(path(s, t), Scalar(-1));
      s.zero_root[c] = rep.scaled(s.sigma[t].inv());
    } else if (conflicts[c]) {
      // (sigma_u - lambda*sigma_v) rep = w*b - path(u) + lambda*path(v)
      const Conflict& k = *conflicts[c];
      const Scalar& lambda = binomials_[k.binomial].tail->second;
      const Scalar gap = s.sigma[k.lead_node] - lambda * s.sigma[k.tail_node];
      Combination rep;
      rep.add_term(k.binomial, k.multiplier, Scalar(1));
      rep.add(path(s, k.lead_node), Scalar(-1));
      rep.add(path(s, k.tail_node), lambda);
      s.zero_root[c] = rep.scaled(gap.inv());
    } else {
      class_of[c] = s.classes.reps.size();
      s.classes.reps.push_back(s.monomials[root]);
      s.classes.members.emplace_back();
      for (std::size_t i : nodes[c]) s.classes.members.back().push_back(s.monomials[i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = s.component[i];
    if (class_of[c] == n) {
      s.classes.zero.push_back(s.monomials[i]);
      s.classes.map.emplace(s.monomials[i], ClassRef{true, 0, Scalar()});
    } else {
      s.classes.map.emplace(s.monomials[i], ClassRef{false, class_of[c], s.sigma[i]});
    }
  }
  return s;
}

Combination QuotientStructure::path(Slice& s, std::size_t i) const {
  std::vector<std::size_t> chain;
  std::size_t cur = i;
  while (s.tree[cur] && !s.path_cache.count(cur)) {
    chain.push_back(cur);
    cur = s.tree[cur]->parent;
  }
  Combination acc = s.tree[cur] ? s.path_cache.at(cur) : Combination();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const TreeEdge& e = *s.tree[*it];
    const Scalar& lambda = binomials_[e.binomial].tail->second;
    Combination next;
    if (e.child_is_lead) {
      // child - sigma*rep = w*b + lambda*(parent - sigma_p*rep)
      next.add_term(e.binomial, e.multiplier, Scalar(1));
      next.add(acc, lambda);
    } else {
      // child - sigma*rep = (parent - sigma_p*rep - w*b) / lambda
      const Scalar inv = lambda.inv();
      next.add_term(e.binomial, e.multiplier, -inv);
      next.add(acc, inv);
    }
    acc = std::move(next);
    s.path_cache[*it] = acc;
  }
  return acc;
}

Combination QuotientStructure::monomial_certificate(const Monomial& m) {
  Slice& s = slice(m.degree());
  const std::size_t i = s.index.at(m);
  Combination c = path(s, i);
  const auto& root = s.zero_root[s.component[i]];
  if (root) c.add(*root, s.sigma[i]);
  return c;
}

std::string QuotientStructure::dump(std::uint32_t d, const Ring& ring) {
  const DegreeClasses& dc = classes(d);
  std::ostringstream os;
  os << "degree " << d << '\n';
  for (std::size_t c = 0; c < dc.reps.size(); ++c) {
    os << "class " << c << ": rep=" << to_string(dc.reps[c], ring) << " members={";
    for (std::size_t k = 0; k < dc.members[c].size(); ++k) {
      const Monomial& m = dc.members[c][k];
      os << (k ? "," : "") << to_string(m, ring) << ':' << dc.at(m).scale.to_string(ring.params);
    }
    os << "}\n";
  }
  os << "ZERO:";
  for (const auto& m : dc.zero) os << ' ' << to_string(m, ring);
  os << '\n';
  return os.str();
}

const DegreeClasses& enumerate_classes(QuotientStructure& q, std::uint32_t d) { return q.classes(d); }

ClassVector reduce_to_classes(QuotientStructure& q, const Polynomial& f) {
  ClassVector v;
  if (f.is_zero()) return v;
  if (!f.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  v.degree = *f.degree();
  const DegreeClasses& dc = q.classes(v.degree);
  for (const auto& [m, a] : f.terms()) {
    const ClassRef& r = dc.at(m);
    if (r.zero) continue;
    Scalar& e = v.entries[r.id];
    e += a * r.scale;
    if (e.is_zero()) v.entries.erase(r.id);
  }
  return v;
}

Polynomial lift_class_binomial(QuotientStructure& q, const ClassVector& v) {
  if (v.entries.size() > 2) throw std::invalid_argument("class vector has more than two entries");
  Polynomial p;
  if (v.entries.empty()) return p;
  const DegreeClasses& dc = q.classes(v.degree);
  for (const auto& [id, c] : v.entries) p.add_term(dc.reps.at(id), c);
  return p;
}

}  // namespace binom
