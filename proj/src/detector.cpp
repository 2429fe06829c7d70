#include "binom/detector.hpp"

#include <map>
#include <stdexcept>

#include "binom/io.hpp"
#include "binom/linalg.hpp"
#include "binom/quotient.hpp"

namespace binom {

DetectionResult detect_binomial_homogeneous(const PolySystem& sys) {
  const std::size_t s = sys.generators.size();
  std::map<std::uint32_t, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < s; ++i) {
    const Polynomial& f = sys.generators[i];
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("generator " + sys.label(i) + " is not homogeneous");
    by_degree[*f.degree()].push_back(i);
  }

  DetectionResult res;
  res.ring = sys.ring;
  QuotientStructure q(sys.ring.nvars(), sys.ring.order);
  std::vector<Combination> b_over_f;           // B[k] over the inputs
  std::vector<Combination> f_over_b(s);        // inputs over B

  for (const auto& [d, idx] : by_degree) {
    const DegreeClasses& dc = q.classes(d);
    const std::size_t ncls = dc.class_count();
    const std::size_t m = idx.size();

    // f = sum v_c rep_c + rest, rest in <B>
    std::vector<ClassVector> vecs;
    std::vector<Combination> rest;
    for (std::size_t i : idx) {
      vecs.push_back(reduce_to_classes(q, sys.generators[i]));
      Combination r;
      for (const auto& [mono, a] : sys.generators[i].terms()) r.add(q.monomial_certificate(mono), a);
      rest.push_back(std::move(r));
    }

    SparseMatrix a{ncls + m, {}};
    for (std::size_t k = 0; k < m; ++k) {
      SparseRow row;
      for (const auto& [c, v] : vecs[k].entries) row.emplace_back(c, v);
      row.emplace_back(ncls + k, Scalar(1));
      a.rows.push_back(std::move(row));
    }
    const RrefResult red = rref(a);

    TraceStep step;
    step.degree = d;
    step.generators = m;
    for (std::size_t k = 0; k < m; ++k)
      if (vecs[k].entries.empty()) step.absorbed.push_back(idx[k]);

    struct Lift {
      Polynomial poly;
      Combination over_f;
      std::size_t pivot;
    };
    std::vector<Lift> lifts;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      if (red.pivots[r] >= ncls) break;
      const SparseRow& row = red.reduced.rows[r];
      ClassVector cv{d, {}};
      Combination t;  // sum t_k f_{idx[k]}
      Combination t_rest;
      for (const auto& [c, v] : row) {
        if (c < ncls) {
          cv.entries.emplace(c, v);
        } else {
          t.add(Combination::unit(idx[c - ncls], sys.ring.nvars()), v);
          t_rest.add(rest[c - ncls], v);
        }
      }
      if (cv.entries.size() >= 3) {
        DetectionWitness w;
        w.degree = d;
        for (const auto& [c, v] : cv.entries) w.row.emplace_back(dc.reps[c], v);
        w.from_inputs = t;
        res.verdict = Verdict::No;
        res.witness = std::move(w);
        step.rank = red.pivots.size();
        res.trace.push_back(std::move(step));
        return res;
      }
      // lift = sum t_k f_k - sum t_k rest_k
      Combination over_f = t;
      over_f.add(substitute(t_rest, b_over_f), Scalar(-1));
      lifts.push_back({lift_class_binomial(q, cv), std::move(over_f), red.pivots[r]});
    }
    step.rank = lifts.size();
    step.new_binomials = lifts.size();

    // Inputs of this degree over B, before B grows (class ids refer to the
    // current slice). The pivot entry of each lift is 1, so the lift is
    // already the normalized binomial lead - lambda*tail.
    const std::size_t base = q.binomials().size();
    for (std::size_t k = 0; k < m; ++k) {
      Combination c = rest[k];
      for (std::size_t l = 0; l < lifts.size(); ++l) {
        auto it = vecs[k].entries.find(lifts[l].pivot);
        if (it != vecs[k].entries.end()) c.add_term(base + l, Monomial(sys.ring.nvars()), it->second);
      }
      f_over_b[idx[k]] = std::move(c);
    }
    for (auto& l : lifts) {
      q.add_binomial(l.poly);
      if (q.binomial_polynomials().back() != l.poly) throw std::logic_error("lift is not normalized");
      b_over_f.push_back(std::move(l.over_f));
    }
    res.trace.push_back(std::move(step));
  }

  res.verdict = Verdict::Yes;
  res.binomials = q.binomial_polynomials();
  Certificate cert;
  cert.ring = sys.ring;
  cert.original = sys.generators;
  cert.derived = res.binomials;
  cert.derived_from_original = std::move(b_over_f);
  cert.original_from_derived = std::move(f_over_b);
  res.certificate = std::move(cert);
  return res;
}

PolySystem extend_with_monomial_multiples(const PolySystem& sys, std::uint32_t bound) {
  if (bound < sys.max_degree()) throw std::invalid_argument("degree bound is below the generator degrees");
  PolySystem out = sys;
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    const Polynomial& f = sys.generators[i];
    if (f.is_zero()) continue;
    const std::uint32_t df = *f.degree();
    for (std::uint32_t e = 1; df + e <= bound; ++e)
      for (const Monomial& w : monomials_of_degree(sys.ring.nvars(), e, sys.ring.order)) {
        out.generators.push_back(multiply(w, f));
        if (!sys.labels.empty()) out.labels.push_back(to_string(w, sys.ring) + "*" + sys.label(i));
      }
  }
  return out;
}

std::string verdict_name(Verdict v) { return v == Verdict::Yes ? "Yes" : "No"; }

nlohmann::json detection_to_json(const DetectionResult& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["ring"] = ring_to_json(r.ring);
  std::vector<std::string> bs;
  for (const auto& b : r.binomials) bs.push_back(to_string(b, r.ring));
  j["binomials"] = bs;
  if (r.witness) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& [m, c] : r.witness->row) row.push_back({{"monomial", to_string(m, r.ring)}, {"coefficient", to_string(c, r.ring)}});
    j["witness"] = {{"degree", r.witness->degree},
                    {"row", row},
                    {"from_inputs", combination_to_json(r.witness->from_inputs, r.ring)}};
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"degree", t.degree},
                     {"generators", t.generators},
                     {"rank", t.rank},
                     {"new_binomials", t.new_binomials},
                     {"absorbed", t.absorbed}});
  j["trace"] = trace;
  j["certificates"] = r.certificate ? certificate_to_json(*r.certificate) : nlohmann::json(nullptr);
  return j;
}

DetectionResult detection_from_json(const nlohmann::json& j) {
  DetectionResult r;
  const std::string v = j.at("verdict").get<std::string>();
  if (v != "Yes" && v != "No") throw std::invalid_argument("unknown verdict '" + v + "'");
  r.verdict = v == "Yes" ? Verdict::Yes : Verdict::No;
  r.ring = ring_from_json(j.at("ring"));
  for (const auto& b : j.at("binomials")) r.binomials.push_back(parse_polynomial(b.get<std::string>(), r.ring));
  if (!j.at("witness").is_null()) {
    DetectionWitness w;
    const auto& jw = j.at("witness");
    w.degree = jw.at("degree").get<std::uint32_t>();
    for (const auto& e : jw.at("row")) {
      const Polynomial m = parse_polynomial(e.at("monomial").get<std::string>(), r.ring);
      w.row.emplace_back(m.terms().begin()->first, parse_scalar(e.at("coefficient").get<std::string>(), r.ring.params));
    }
    w.from_inputs = combination_from_json(jw.at("from_inputs"), r.ring);
    r.witness = std::move(w);
  }
  for (const auto& t : j.at("trace"))
    r.trace.push_back({t.at("degree").get<std::uint32_t>(), t.at("generators").get<std::size_t>(),
                       t.at("rank").get<std::size_t>(), t.at("new_binomials").get<std::size_t>(),
                       t.at("absorbed").get<std::vector<std::size_t>>()});
  if (!j.at("certificates").is_null()) r.certificate = certificate_from_json(j.at("certificates"));
  return r;
}

}  // namespace binom
