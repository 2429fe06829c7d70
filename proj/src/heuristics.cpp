#include "binom/heuristics.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "binom/io.hpp"

namespace binom {

// ---------------------------------------------------------------- rules

std::vector<RewriteRule> rules_from(const Polynomial& binomial, std::size_t provenance, MonomialOrder order) {
  if (binomial.is_zero() || binomial.size() > 2)
    throw std::invalid_argument("rewrite rules come from binomials and monomials only");
  const auto t = binomial.sorted_terms(order);
  if (t.size() == 1) return {RewriteRule{t[0].first, std::nullopt, provenance}};
  const auto& [u, a] = t[0];
  const auto& [v, b] = t[1];
  return {RewriteRule{u, std::make_pair(v, -b / a), provenance}, RewriteRule{v, std::make_pair(u, -a / b), provenance}};
}

bool terminates(const RewriteRule& rule) { return !rule.to || !rule.from.divides(rule.to->first); }

namespace {

std::string rule_text(const RewriteRule& r, const Ring& ring) {
  std::string out = to_string(r.from, ring) + " -> ";
  if (!r.to) return out + "0";
  return out + to_string(Polynomial::monomial(r.to->first, r.to->second), ring);
}

/// Rewrites f in place until no term is divisible by rule.from; returns q
/// with f_new = f_old - q * source.
Polynomial rewrite(Polynomial& f, const RewriteRule& rule, const Polynomial& source) {
  const Scalar a = source.coefficient(rule.from);
  Polynomial q;
  for (;;) {
    auto hit = std::find_if(f.terms().begin(), f.terms().end(),
                            [&](const auto& t) { return rule.from.divides(t.first); });
    if (hit == f.terms().end()) return q;
    const Monomial w = *rule.from.quotient_of(hit->first);
    const Scalar k = hit->second / a;
    f -= source.times(w, k);
    q.add_term(w, k);
  }
}

// ------------------------------------------------------ tracked edits

using Gens = std::map<std::size_t, Polynomial>;

struct Op {
  enum Kind { Reduce, Scale, Drop } kind = Reduce;
  std::size_t id = 0;
  std::vector<std::pair<std::size_t, Polynomial>> by;  // Reduce: g_id -= sum q * g_k
  Scalar factor;                                      // Scale
  std::vector<std::pair<std::size_t, Scalar>> combo;  // Drop: g_id = sum c * g_k
};

void apply_to(Gens& g, const Op& op) {
  switch (op.kind) {
    case Op::Reduce:
      for (const auto& [k, q] : op.by) g.at(op.id) -= q * g.at(k);
      break;
    case Op::Scale:
      g.at(op.id) = g.at(op.id).scaled(op.factor);
      break;
    case Op::Drop:
      g.erase(op.id);
      break;
  }
}

/// Keeps both directions of the certificate while ops are applied.
class Tracker {
 public:
  Tracker(const std::vector<Polynomial>& base, std::size_t nvars) : base_(base), nvars_(nvars) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      gens_[i] = base[i];
      fwd_[i] = Combination::unit(i, nvars);
      bwd_.push_back(Combination::unit(i, nvars));
    }
  }

  const Gens& gens() const { return gens_; }

  void apply_op(const Op& op) {
    switch (op.kind) {
      case Op::Reduce:
        for (const auto& [k, q] : op.by) {
          if (!gens_.count(k) || k == op.id) throw std::logic_error("bad reduce");
          for (const auto& [m, c] : q.terms()) fwd_.at(op.id).add(fwd_.at(k), m, -c);
          for (auto& b : bwd_) {
            auto it = b.cofactors.find(op.id);
            if (it != b.cofactors.end()) b.add(k, it->second * q);
          }
        }
        break;
      case Op::Scale:
        fwd_.at(op.id) = fwd_.at(op.id).scaled(op.factor);
        for (auto& b : bwd_) {
          auto it = b.cofactors.find(op.id);
          if (it != b.cofactors.end()) it->second = it->second.scaled(op.factor.inv());
        }
        break;
      case Op::Drop:
        for (auto& b : bwd_) {
          auto it = b.cofactors.find(op.id);
          if (it == b.cofactors.end()) continue;
          const Polynomial d = it->second;
          b.cofactors.erase(it);
          for (const auto& [k, c] : op.combo) {
            if (!gens_.count(k) || k == op.id) throw std::logic_error("bad drop");
            b.add(k, d.scaled(c));
          }
        }
        fwd_.erase(op.id);
        break;
    }
    apply_to(gens_, op);
  }

  /// Derived generators in the given id order.
  Certificate certificate(const Ring& ring, const std::vector<std::size_t>& ids) const {
    Certificate cert;
    cert.ring = ring;
    cert.original = base_;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      pos[ids[i]] = i;
      cert.derived.push_back(gens_.at(ids[i]));
      cert.derived_from_original.push_back(fwd_.at(ids[i]));
    }
    for (const auto& b : bwd_) {
      Combination c;
      for (const auto& [id, p] : b.cofactors) c.add(pos.at(id), p);
      cert.original_from_derived.push_back(c);
    }
    return cert;
  }

 private:
  std::vector<Polynomial> base_;
  std::size_t nvars_;
  Gens gens_;
  std::map<std::size_t, Combination> fwd_;
  std::vector<Combination> bwd_;
};

std::size_t term_count(const Gens& g) {
  std::size_t n = 0;
  for (const auto& [id, p] : g) n += p.size();
  return n;
}

std::size_t long_count(const Gens& g) {
  std::size_t n = 0;
  for (const auto& [id, p] : g) n += p.size() > 2;
  return n;
}

std::string fresh_name(const Ring& ring, const std::string& stem) {
  for (int i = 0;; ++i) {
    const std::string name = i ? stem + std::to_string(i) : stem;
    if (!ring.var_index(name) && !ring.param_index(name)) return name;
  }
}

}  // namespace

// ----------------------------------------------------------- substitute

Rewritten substitute(const PolySystem& sys, const RewriteRule& rule, RewriteTargets targets) {
  if (rule.provenance >= sys.generators.size()) throw std::invalid_argument("rule has no source generator");
  if (!terminates(rule)) throw std::invalid_argument("rule " + rule_text(rule, sys.ring) + " never stops");
  const Polynomial& source = sys.generators[rule.provenance];
  if (source.coefficient(rule.from).is_zero()) throw std::invalid_argument("rule does not come from its source");
  Tracker t(sys.generators, sys.ring.nvars());
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    if (i == rule.provenance) continue;
    if (targets == RewriteTargets::NonBinomial && sys.generators[i].is_binomial()) continue;
    Polynomial f = sys.generators[i];
    const Polynomial q = rewrite(f, rule, source);
    if (!q.is_zero()) t.apply_op({Op::Reduce, i, {{rule.provenance, q}}, {}, {}});
  }
  std::vector<std::size_t> ids(sys.generators.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  Rewritten out{sys, t.certificate(sys.ring, ids)};
  out.system.generators = out.certificate.derived;
  return out;
}

// ---------------------------------------------------------- linear pass

LinearPass linear_pass(const PolySystem& sys) {
  const CoefficientMatrix a = linearize(sys);
  const std::size_t width = a.ncols(), n = sys.ring.nvars();
  SparseMatrix aug{width + a.rows.size(), {}};
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    SparseRow row = a.rows[i];
    row.emplace_back(width + i, Scalar(1));
    aug.rows.push_back(std::move(row));
  }
  const RrefResult r = rref(aug);

  LinearPass out;
  out.system.ring = sys.ring;
  out.partitioned = true;
  out.certificate.ring = sys.ring;
  out.certificate.original = sys.generators;
  std::vector<std::size_t> pivots;
  for (std::size_t k = 0; k < r.reduced.rows.size(); ++k) {
    if (r.pivots[k] >= width) break;  // identity block only: a dependency
    SparseRow left;
    Combination from;
    for (const auto& [c, v] : r.reduced.rows[k]) {
      if (c < width)
        left.emplace_back(c, v);
      else
        from.add(c - width, Polynomial::constant(n, v));
    }
    out.partitioned = out.partitioned && left.size() <= 2;
    out.system.generators.push_back(row_polynomial(left, a.legend));
    out.certificate.derived_from_original.push_back(std::move(from));
    pivots.push_back(r.pivots[k]);
  }
  out.certificate.derived = out.system.generators;
  // rows are 1 at their pivot and 0 at the others, so f_i reads off its
  // coefficients in the pivot columns
  for (const auto& row : a.rows) {
    Combination c;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Scalar v = row_entry(row, pivots[k]);
      if (!v.is_zero()) c.add(k, Polynomial::constant(n, v));
    }
    out.certificate.original_from_derived.push_back(std::move(c));
  }
  return out;
}

// ----------------------------------------------- homogenize and detect

Certificate dehomogenize(const Certificate& cert, const std::string& var) {
  const auto idx = cert.ring.var_index(var);
  if (!idx) throw std::invalid_argument("no variable '" + var + "'");
  auto poly = [&](const Polynomial& p) { return dehomogenize(p, *idx); };
  auto combo = [&](const Combination& c) {
    Combination out;
    for (const auto& [i, p] : c.cofactors) out.add(i, poly(p));
    return out;
  };
  Certificate out;
  out.ring = cert.ring;
  out.ring.vars.erase(out.ring.vars.begin() + static_cast<std::ptrdiff_t>(*idx));
  for (const auto& p : cert.original) out.original.push_back(poly(p));
  for (const auto& p : cert.derived) out.derived.push_back(poly(p));
  for (const auto& c : cert.derived_from_original) out.derived_from_original.push_back(combo(c));
  for (const auto& c : cert.original_from_derived) out.original_from_derived.push_back(combo(c));
  return out;
}

HomogenizedDetection homogenize_and_detect(const PolySystem& sys) {
  HomogenizedDetection out;
  if (sys.all_homogeneous()) {
    out.homogenized = sys;
  } else {
    out.variable = fresh_name(sys.ring, "h");
    out.homogenized = homogenize(sys, out.variable);
  }
  out.detection = detect_binomial_homogeneous(out.homogenized);
  if (out.detection.verdict == Verdict::No) return out;
  Certificate cert = *out.detection.certificate;
  if (!out.variable.empty()) cert = dehomogenize(cert, out.variable);
  if (cert.original != sys.generators) throw std::logic_error("dehomogenized generators differ from the input");
  cert.ring = sys.ring;
  out.binomials = PolySystem{sys.ring, cert.derived, {}};
  out.certificate = std::move(cert);
  return out;
}

// ------------------------------------------------------------- search

namespace {

using Score = std::pair<std::size_t, std::size_t>;

struct Node {
  Gens gens;
  std::vector<Op> ops;  // from the parent's gens
  std::ptrdiff_t parent = -1;
  std::size_t depth = 0;
  Score score;
  std::string move;
};

class Search {
 public:
  Search(const PolySystem& sys, const SearchOptions& opt) : sys_(sys), opt_(opt) {}

  PipelineReport run() {
    Node root;
    for (std::size_t i = 0; i < sys_.generators.size(); ++i) root.gens[i] = sys_.generators[i];
    // rewrite before pruning: which copy of a dependent generator survives
    // is decided after the first move, not up front
    tidy(root, {}, false);
    root.score = score(root.gens);
    nodes_.push_back(std::move(root));
    seen_.insert(key(nodes_[0].gens));

    auto worse = [this](std::size_t a, std::size_t b) { return rank(a) > rank(b); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);
    open.push(0);
    std::size_t best = 0, expanded = 0;
    while (!open.empty() && expanded < opt_.max_expansions) {
      const std::size_t cur = open.top();
      open.pop();
      if (rank(cur) < rank(best)) best = cur;
      if (nodes_[cur].score.first == 0) break;
      if (nodes_[cur].depth >= opt_.max_depth) continue;
      ++expanded;
      for (std::size_t c : expand(cur)) open.push(c);
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (rank(i) < rank(best)) best = i;
    return report(best, expanded);
  }

 private:
  std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> rank(std::size_t i) const {
    return {nodes_[i].score.first, nodes_[i].score.second, nodes_[i].depth, i};
  }

  static Score score(const Gens& g) { return {long_count(g), term_count(g)}; }

  std::string key(const Gens& g) const {
    std::vector<std::string> parts;
    for (const auto& [id, p] : g) parts.push_back(to_string(p.monic(sys_.ring.order), sys_.ring));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& s : parts) out += s + ";";
    return out;
  }

  void push(Node& n, Op op) {
    apply_to(n.gens, op);
    n.ops.push_back(std::move(op));
  }

  /// Drop zeros and linear dependencies (keeping untouched generators over
  /// rewritten ones), then shorten long generators against each other.
  void drop_zeros(Node& n) {
    std::vector<std::size_t> zeros;
    for (const auto& [id, p] : n.gens)
      if (p.is_zero()) zeros.push_back(id);
    for (std::size_t id : zeros) push(n, {Op::Drop, id, {}, {}, {}});
  }

  void tidy(Node& n, const std::set<std::size_t>& touched, bool prune = true) {
    drop_zeros(n);

    std::vector<std::size_t> order;
    for (const auto& [id, p] : n.gens)
      if (!touched.count(id)) order.push_back(id);
    for (const auto& [id, p] : n.gens)
      if (touched.count(id)) order.push_back(id);
    PolySystem view{sys_.ring, {}, {}};
    for (std::size_t id : order) view.generators.push_back(n.gens.at(id));
    const PruneResult pr = prune ? prune_redundant_generators(view) : PruneResult{};
    for (const auto& rel : pr.relations) {
      Op op{Op::Drop, order[rel.dropped], {}, {}, {}};
      for (const auto& [j, c] : rel.combination) op.combo.emplace_back(order[j], c);
      push(n, std::move(op));
    }

    for (bool changed = true; changed;) {
      changed = false;
      for (auto& [i, gi] : n.gens) {
        if (gi.size() <= 2) continue;
        for (const auto& [j, gj] : n.gens) {
          if (i == j || gj.size() <= 2) continue;
          for (const auto& [m, cj] : gj.terms()) {
            const Scalar ci = gi.coefficient(m);
            if (ci.is_zero()) continue;
            const Scalar f = ci / cj;
            if ((gi - gj.scaled(f)).size() >= gi.size()) continue;
            push(n, {Op::Reduce, i, {{j, Polynomial::constant(sys_.ring.nvars(), f)}}, {}, {}});
            changed = true;
            break;
          }
          if (changed) break;
        }
        if (changed) break;
      }
    }
    // two proportional long generators cancel outright
    drop_zeros(n);
  }

  struct Move {
    std::vector<RewriteRule> rules;
    std::string name;
  };

  std::vector<std::size_t> expand(std::size_t cur) {
    const Gens& g = nodes_[cur].gens;
    std::vector<std::size_t> sources, targets;
    for (const auto& [id, p] : g) {
      if (p.is_binomial() && !p.is_zero()) sources.push_back(id);
      if (p.size() > 2 || opt_.rewrite_binomials) targets.push_back(id);
    }
    std::vector<Move> moves;
    Move all_default{{}, "all default"}, all_reversed{{}, "all reversed"};
    for (std::size_t id : sources) {
      const auto rules = rules_from(g.at(id), id, sys_.ring.order);
      // reversed first: on ties, replacing the smaller monomial wins
      for (std::size_t kk = 0; kk < rules.size(); ++kk) {
        const std::size_t k = rules.size() - 1 - kk;
        if (!terminates(rules[k])) continue;
        moves.push_back({{rules[k]}, rule_text(rules[k], sys_.ring) + " (" + sys_.label(id) + ")"});
      }
      if (terminates(rules.front())) all_default.rules.push_back(rules.front());
      if (terminates(rules.back())) all_reversed.rules.push_back(rules.back());
    }
    moves.insert(moves.begin(), all_default);
    moves.insert(moves.begin(), all_reversed);

    std::vector<std::optional<Node>> children(moves.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < moves.size(); ++k) children[k] = apply_move(cur, moves[k], targets);

    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < children.size(); ++k)
      if (children[k]) order.push_back(k);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return children[a]->score < children[b]->score; });
    std::vector<std::size_t> out;
    for (std::size_t k : order) {
      if (out.size() >= opt_.branch) break;
      if (!seen_.insert(key(children[k]->gens)).second) continue;
      nodes_.push_back(std::move(*children[k]));
      out.push_back(nodes_.size() - 1);
    }
    return out;
  }

  std::optional<Node> apply_move(std::size_t cur, const Move& mv, const std::vector<std::size_t>& targets) {
    Node n;
    n.gens = nodes_[cur].gens;
    n.parent = static_cast<std::ptrdiff_t>(cur);
    n.depth = nodes_[cur].depth + 1;
    n.move = mv.name;
    std::set<std::size_t> touched;
    for (const auto& rule : mv.rules) {
      const Polynomial source = n.gens.at(rule.provenance);
      if (source.coefficient(rule.from).is_zero()) continue;  // rewritten earlier in this move
      for (std::size_t id : targets) {
        if (id == rule.provenance || !n.gens.count(id)) continue;
        Polynomial f = n.gens.at(id);
        const Polynomial q = rewrite(f, rule, source);
        if (q.is_zero()) continue;
        push(n, {Op::Reduce, id, {{rule.provenance, q}}, {}, {}});
        touched.insert(id);
      }
    }
    if (touched.empty()) return std::nullopt;
    tidy(n, touched);
    n.score = score(n.gens);
    return n;
  }

  PipelineReport report(std::size_t best, std::size_t expanded) const {
    std::vector<std::size_t> path;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(best); i >= 0; i = nodes_[static_cast<std::size_t>(i)].parent)
      path.push_back(static_cast<std::size_t>(i));
    std::reverse(path.begin(), path.end());

    Tracker t(sys_.generators, sys_.ring.nvars());
    PipelineReport r;
    r.ring = sys_.ring;
    r.input = sys_.generators;
    for (std::size_t i : path) {
      for (const auto& op : nodes_[i].ops) t.apply_op(op);
      if (nodes_[i].parent >= 0) r.moves.push_back(nodes_[i].move);
    }
    if (t.gens() != nodes_[best].gens) throw std::logic_error("replayed search path disagrees with the search");
    std::vector<std::size_t> ids;
    for (const auto& [id, p] : t.gens())
      if (p.is_binomial()) {
        ids.push_back(id);
        r.binomials.push_back(p);
      }
    for (const auto& [id, p] : t.gens())
      if (!p.is_binomial()) {
        ids.push_back(id);
        r.non_binomials.push_back(p);
      }
    r.certificate = t.certificate(sys_.ring, ids);
    r.verdict = r.non_binomials.empty() ? PipelineVerdict::Binomial : PipelineVerdict::Inconclusive;
    std::ostringstream detail;
    detail << "depth " << path.size() - 1 << ", expanded " << expanded << ", " << r.binomials.size() << " binomials, "
           << r.non_binomials.size() << " longer";
    r.stages.push_back({"substitution", r.non_binomials.empty() ? "binomial" : "inconclusive", detail.str()});
    return r;
  }

  const PolySystem& sys_;
  SearchOptions opt_;
  std::vector<Node> nodes_;
  std::set<std::string> seen_;
};

}  // namespace

PipelineReport substitution_search(const PolySystem& sys, const SearchOptions& options) {
  if (options.max_depth < 1 || options.branch < 1) throw std::invalid_argument("search bounds must be at least 1");
  return Search(sys, options).run();
}

// ------------------------------------------------------------- recipe

std::string pipeline_verdict_name(PipelineVerdict v) {
  switch (v) {
    case PipelineVerdict::Binomial:
      return "Binomial";
    case PipelineVerdict::NotBinomialProven:
      return "NotBinomialProven";
    case PipelineVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

void finish_binomial(PipelineReport& r, const std::vector<Polynomial>& gens, Certificate cert) {
  r.verdict = PipelineVerdict::Binomial;
  r.binomials = gens;
  r.non_binomials.clear();
  r.certificate = std::move(cert);
}

std::string count_text(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

}  // namespace

PipelineReport run_recipe(const PolySystem& sys, const RecipeOptions& options) {
  PipelineReport r;
  r.ring = sys.ring;
  r.input = sys.generators;

  const LinearPass lp = linear_pass(sys);
  if (lp.partitioned) {
    r.stages.push_back({"linear", "binomial", count_text(lp.system.generators.size(), "rows, all binomial")});
    finish_binomial(r, lp.system.generators, lp.certificate);
    return r;
  }
  r.stages.push_back({"linear", "inconclusive", count_text(lp.system.generators.size(), "rows")});

  const HomogenizedDetection hd = homogenize_and_detect(lp.system);
  if (hd.detection.verdict == Verdict::Yes) {
    r.stages.push_back({"homogenized", "binomial", count_text(hd.binomials->generators.size(), "binomials")});
    finish_binomial(r, hd.binomials->generators, compose(lp.certificate, *hd.certificate));
    return r;
  }
  if (hd.variable.empty()) {
    // the rows are homogeneous, so the ideal is and the refusal is a proof
    r.stages.push_back({"homogenized", "not-binomial", "witness row in degree " + std::to_string(hd.detection.witness->degree)});
    r.verdict = PipelineVerdict::NotBinomialProven;
    r.binomials.clear();
    r.non_binomials = lp.system.generators;
    r.certificate = lp.certificate;
    return r;
  }
  r.stages.push_back({"homogenized", "inconclusive", "refused after adding " + hd.variable});

  PipelineReport s = substitution_search(sys, options.search);
  r.stages.push_back(s.stages.front());
  r.moves = s.moves;
  r.binomials = s.binomials;
  r.non_binomials = s.non_binomials;
  r.certificate = s.certificate;
  if (s.verdict == PipelineVerdict::Binomial) {
    r.verdict = PipelineVerdict::Binomial;
    return r;
  }

  if (options.homogenize_retry) {
    PolySystem best{sys.ring, s.certificate->derived, {}};
    const HomogenizedDetection again = homogenize_and_detect(best);
    if (again.detection.verdict == Verdict::Yes) {
      r.stages.push_back({"rehomogenized", "binomial", count_text(again.binomials->generators.size(), "binomials")});
      finish_binomial(r, again.binomials->generators, compose(*s.certificate, *again.certificate));
      return r;
    }
    r.stages.push_back({"rehomogenized", "inconclusive", "refused"});
  } else {
    r.stages.push_back({"rehomogenized", "skipped", ""});
  }

  if (!options.enable_gb_oracle) {
    r.stages.push_back({"groebner", "skipped", "not enabled"});
    return r;
  }
  try {
    const Certificate gb = groebner_certificate(sys, sys.ring.order, options.guard);
    const bool binomial = std::all_of(gb.derived.begin(), gb.derived.end(), [](const Polynomial& p) { return p.is_binomial(); });
    if (binomial) {
      r.stages.push_back({"groebner", "binomial", count_text(gb.derived.size(), "basis elements")});
      finish_binomial(r, gb.derived, gb);
      r.moves.clear();
      return r;
    }
    r.stages.push_back({"groebner", "inconclusive", "reduced basis has a longer element"});
  } catch (const GuardExceeded& e) {
    r.stages.push_back({"groebner", "skipped", e.what()});
  }
  return r;
}

// --------------------------------------------------------------- json

nlohmann::json report_to_json(const PipelineReport& r) {
  auto polys = [&](const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p, r.ring));
    return out;
  };
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.stage}, {"outcome", s.outcome}, {"detail", s.detail}});
  return {{"verdict", pipeline_verdict_name(r.verdict)},
          {"ring", ring_to_json(r.ring)},
          {"input", polys(r.input)},
          {"stages", stages},
          {"binomials", polys(r.binomials)},
          {"non_binomials", polys(r.non_binomials)},
          {"moves", r.moves},
          {"certificate", r.certificate ? certificate_to_json(*r.certificate) : nlohmann::json(nullptr)}};
}

PipelineReport report_from_json(const nlohmann::json& j) {
  PipelineReport r;
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "Binomial")
    r.verdict = PipelineVerdict::Binomial;
  else if (v == "NotBinomialProven")
    r.verdict = PipelineVerdict::NotBinomialProven;
  else if (v == "Inconclusive")
    r.verdict = PipelineVerdict::Inconclusive;
  else
    throw std::invalid_argument("unknown verdict '" + v + "'");
  r.ring = ring_from_json(j.at("ring"));
  auto polys = [&](const nlohmann::json& a) {
    std::vector<Polynomial> out;
    for (const auto& s : a) out.push_back(parse_polynomial(s.get<std::string>(), r.ring));
    return out;
  };
  r.input = polys(j.at("input"));
  for (const auto& s : j.at("stages"))
    r.stages.push_back({s.at("stage").get<std::string>(), s.at("outcome").get<std::string>(), s.at("detail").get<std::string>()});
  r.binomials = polys(j.at("binomials"));
  r.non_binomials = polys(j.at("non_binomials"));
  r.moves = j.at("moves").get<std::vector<std::string>>();
  if (!j.at("certificate").is_null()) r.certificate = certificate_from_json(j.at("certificate"));
  return r;
}

}  // namespace binom
