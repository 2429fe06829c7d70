// Acceptance checks, one PASS/FAIL line each. Exit status is nonzero when a
// check fails that is not on the known-red list below.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "binom/certificate.hpp"
#include "binom/crn.hpp"
#include "binom/detector.hpp"
#include "binom/gb_oracle.hpp"
#include "binom/heuristics.hpp"
#include "binom/io.hpp"
#include "binom/linalg.hpp"
#include "binom/quotient.hpp"
#include "random_systems.hpp"

using namespace binom;
namespace fs = std::filesystem;

namespace {

// wall-clock limits in seconds
constexpr double kLimit1 = 1, kLimit2 = 1, kLimit3 = 30, kLimit4 = 5, kLimit5 = 1, kLimit6 = 60, kLimit7 = 600,
                 kLimit8 = 600, kLimit9 = 600;
constexpr int kRandomSystems = 200, kRandomBinomialSets = 100;
// the generator leans towards Yes; keep drawing until both verdicts are common
constexpr int kMinEachVerdict = 50, kMaxDraws = 5000;

// criteria that currently fail for a documented reason; they still print FAIL
const std::set<int> kKnownRed = {6};

std::string fixtures_dir = BINOM_FIXTURES;
std::string cli_path = BINOM_CLI;
std::uint32_t seed = 20240601;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[missing: " << what << "] ";
    }
  }
};

PolySystem fixture(const std::string& name) { return read_system_file(fixtures_dir + "/" + name); }

PolySystem sys_of(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  PolySystem s;
  s.ring.vars = vars;
  for (const auto& g : gens) s.generators.push_back(parse_polynomial(g, s.ring));
  return s;
}

// same multiset of polynomials up to nonzero scalars
bool same_up_to_scaling(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const Ring& ring) {
  std::multiset<std::string> ka, kb;
  for (const auto& p : a) ka.insert(to_string(p.monic(ring.order), ring));
  for (const auto& p : b) kb.insert(to_string(p.monic(ring.order), ring));
  return ka == kb;
}

std::size_t count_matches(const std::vector<Polynomial>& have, const std::vector<Polynomial>& want, MonomialOrder o) {
  std::size_t n = 0;
  for (const auto& w : want)
    for (const auto& h : have)
      if (h.monic(o) == w.monic(o)) {
        ++n;
        break;
      }
  return n;
}

GroebnerBasis unguarded_gb(const std::vector<Polynomial>& gens, const Ring& ring) {
  GbGuard off;
  off.enforce = false;
  return buchberger(PolySystem{ring, gens, {}}, ring.order, off);
}

SparseMatrix degree_slice(const PolySystem& s, std::uint32_t d) {
  std::vector<Polynomial> rows;
  for (const auto& f : s.generators)
    for (const auto& m : monomials_of_degree(s.ring.nvars(), d - *f.degree(), s.ring.order)) rows.push_back(multiply(m, f));
  return linearize(rows, s.ring.order).sparse();
}

// ------------------------------------------------------------ criteria

void absorbed_quadric(Outcome& o) {
  const PolySystem s = fixture("absorbed_quadric.sys");
  const DetectionResult r = detect_binomial_homogeneous(s);
  o.require(r.verdict == Verdict::Yes, "verdict Yes");
  o.require(same_up_to_scaling(r.binomials, sys_of(s.ring.vars, {"x - y", "z - w"}).generators, s.ring), "B = {x-y, z-w}");
  bool absorbed = false;
  for (const auto& t : r.trace)
    if (t.degree == 2 && t.absorbed == std::vector<std::size_t>{2}) absorbed = true;
  o.require(absorbed, "f3 absorbed at degree 2");
  o.detail << r.binomials.size() << " binomials, " << r.trace.size() << " degrees";
}

void homogenization_counterexample(Outcome& o) {
  const PolySystem s = fixture("homogenization_fails.sys");
  const PipelineReport r = run_recipe(s);
  o.require(r.verdict == PipelineVerdict::Binomial, "Binomial");
  o.require(r.stages.size() == 1 && r.stages[0].stage == "linear", "decided by the linear pass alone");
  o.require(same_up_to_scaling(r.binomials, sys_of(s.ring.vars, {"2*a*b + 1", "2*x + 1", "2*y + 1"}).generators, s.ring),
            "{2ab+1, 2x+1, 2y+1}");
  const PolySystem h = sys_of({"a", "b", "x", "y", "z"}, {"a*b - x*z", "a*b - y*z", "x + y + z"});
  o.require(detect_binomial_homogeneous(h).verdict == Verdict::No, "homogenized generators refused");
  o.detail << "stage " << r.stages[0].stage << ", homogenized verdict No";
}

void sum_of_squares(Outcome& o) {
  const PolySystem s = sys_of({"x", "y", "z"}, {"x^2 + y^2 + z^2"});
  const DetectionResult r = detect_binomial_homogeneous(s);
  o.require(r.verdict == Verdict::No, "detect No");
  for (std::uint32_t d = 2; d <= 6; ++d) {
    const SparseMatrix m = degree_slice(s, d);
    const bool found = sparse_vector_in_rowspace(m).has_value();
    o.require(!found, "no two-term vector in degree " + std::to_string(d));
    o.detail << "d" << d << ":" << m.rows.size() << "x" << m.ncols << " ";
  }
}

void obfuscated_quadric(Outcome& o) {
  const PolySystem s = fixture("obfuscated_quadric.sys");
  const PipelineReport r = run_recipe(s);
  o.require(r.verdict == PipelineVerdict::Binomial, "Binomial");
  o.require(same_up_to_scaling(r.binomials, sys_of(s.ring.vars, {"x - y", "2*x^2 + z^2"}).generators, s.ring),
            "{x-y, 2x^2+z^2}");
  o.require(r.certificate && verify(*r.certificate).ok, "certificate");
  for (std::uint32_t bound = 2; bound <= 4; ++bound) {
    const bool ok = pkb_test(linearize(extend_with_monomial_multiples(s, bound))).ok();
    o.require(!ok, "no partitioning basis with multiples up to degree " + std::to_string(bound));
  }
  o.detail << "stage " << r.stages.back().stage << ", multiples to degree 4 never partition";
}

void classes_mod_difference_of_squares(Outcome& o) {
  const PolySystem b = sys_of({"x", "y"}, {"x^2 - y^2"});
  QuotientStructure q(2, b.ring.order);
  q.add_binomial(b.generators[0]);
  const DegreeClasses& c = enumerate_classes(q, 3);
  auto mono = [&](const char* t) { return parse_polynomial(t, b.ring).terms().begin()->first; };
  std::set<std::set<Monomial>> got;
  for (const auto& members : c.members) got.insert({members.begin(), members.end()});
  const std::set<std::set<Monomial>> want = {{mono("x^3"), mono("x*y^2")}, {mono("x^2*y"), mono("y^3")}};
  o.require(got == want && c.zero.empty(), "classes {x^3, xy^2}, {x^2y, y^3}");
  const ClassVector v = reduce_to_classes(q, parse_polynomial("x^3 + x*y^2 + y^3", b.ring));
  const auto& a = c.at(mono("x^3"));
  const auto& bb = c.at(mono("x^2*y"));
  // entries are on representatives; x^3 = scale * rep, so its coefficient is entry / scale
  const Scalar ex = v.entries.count(a.id) ? v.entries.at(a.id) / a.scale : Scalar(0);
  const Scalar ey = v.entries.count(bb.id) ? v.entries.at(bb.id) / bb.scale : Scalar(0);
  o.require(v.entries.size() == 2 && ex == Scalar(2) && ey == Scalar(1), "vector [2, 1]");
  o.detail << c.class_count() << " classes, vector [" << to_string(ex, b.ring) << ", " << to_string(ey, b.ring) << "]";
}

void small_network(Outcome& o) {
  const PolySystem s = fixture("shinar.sys");
  const PolySystem reference = fixture("shinar_binomial.sys");
  const PipelineReport r = run_recipe(s);
  o.require(r.verdict == PipelineVerdict::Binomial, "Binomial");
  o.require(r.binomials.size() == 7, "7 binomials");
  o.require(r.certificate && verify(*r.certificate).ok && r.certificate->original == s.generators, "certificate");
  o.require(unguarded_gb(r.binomials, s.ring).elements == unguarded_gb(reference.generators, s.ring).elements,
            "same ideal as the reference binomials");
  const std::size_t m = count_matches(r.binomials, reference.generators, s.ring.order);
  o.require(m == reference.generators.size(), "every reference binomial up to scaling");
  o.detail << r.binomials.size() << " binomials, " << m << "/" << reference.generators.size()
           << " equal to a reference one, same ideal";
}

void large_network(Outcome& o) {
  const PolySystem s = fixture("erk.sys");
  const PolySystem reference = fixture("erk_rewritten.sys");
  const PruneResult pr = prune_redundant_generators(s);
  o.require(pr.relations.size() == 7, "7 linear relations");
  const std::vector<Polynomial> five = {reference.generators[0], reference.generators[1], reference.generators[2],
                                        reference.generators[5], reference.generators[6]};
  auto good = [&](const PipelineReport& r) {
    if (count_matches(r.binomials, five, s.ring.order) != 5 || r.non_binomials.size() > 2) return false;
    for (const auto& p : r.non_binomials)
      if (p.size() > 3) return false;
    return r.certificate && verify(*r.certificate).ok;
  };
  PipelineReport r = substitution_search(s);
  std::string bounds = "default bounds";
  if (!good(r)) {
    SearchOptions wide;
    wide.branch = 32;
    r = substitution_search(s, wide);
    bounds = "branch 32";
  }
  o.require(good(r), "f1', f7', f11', f26', f28' and at most two trinomials");
  o.detail << pr.relations.size() << " relations; " << bounds << ": " << r.binomials.size() << " binomials, "
           << r.non_binomials.size() << " longer (max " ;
  std::size_t longest = 0;
  for (const auto& p : r.non_binomials) longest = std::max(longest, p.size());
  o.detail << longest << " terms), " << count_matches(r.non_binomials, {reference.generators[3], reference.generators[4], reference.generators[7]}, s.ring.order)
           << " longer ones match the reference";
}

void oracle_agreement(Outcome& o) {
  std::mt19937 rng(seed);
  int checked = 0, skipped = 0, disagree = 0, yes = 0;
  for (int draws = 0; draws < kMaxDraws && (checked < kRandomSystems || yes < kMinEachVerdict || checked - yes < kMinEachVerdict); ++draws) {
    const PolySystem s = testing::random_homogeneous_system(rng);
    bool oracle = false;
    try {
      oracle = is_binomial_ideal_oracle(s);
    } catch (const GuardExceeded&) {
      ++skipped;
      continue;
    }
    const bool detected = detect_binomial_homogeneous(s).verdict == Verdict::Yes;
    if (detected != oracle) ++disagree;
    yes += detected;
    ++checked;
  }
  o.require(disagree == 0, "verdicts agree");
  o.require(checked >= kRandomSystems && yes >= kMinEachVerdict && checked - yes >= kMinEachVerdict, "enough of each verdict");
  int sets = 0, mismatches = 0;
  for (; sets < kRandomBinomialSets; ++sets) {
    const PolySystem b = testing::random_binomial_set(rng);
    QuotientStructure q(b.ring.nvars(), b.ring.order);
    for (const auto& p : b.generators) q.add_binomial(p);
    for (std::uint32_t d = 0; d <= 4; ++d)
      if (q.classes(d).class_count() != quotient_dimension_oracle(b, d)) ++mismatches;
  }
  o.require(mismatches == 0, "class counts agree");
  o.detail << checked << " systems (" << yes << " yes, " << skipped << " over the guard), " << disagree
           << " disagreements; " << sets << " binomial sets, " << mismatches << " count mismatches";
}

int run_cli(const std::vector<std::string>& args) {
  std::string cmd = "\"" + cli_path + "\"";
  for (const auto& a : args) cmd += " \"" + a + "\"";
  cmd += " > /dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

// c + 1 in place of c, for each coefficient in turn
std::vector<Certificate> mutations(const Certificate& c) {
  std::vector<Certificate> out;
  auto bump_poly = [](Polynomial& p, std::size_t k) {
    auto it = std::next(p.terms().begin(), static_cast<std::ptrdiff_t>(k));
    p.add_term(it->first, Scalar(1));
  };
  for (std::size_t i = 0; i < c.derived.size(); ++i)
    for (std::size_t k = 0; k < c.derived[i].size(); ++k) {
      Certificate m = c;
      bump_poly(m.derived[i], k);
      out.push_back(std::move(m));
    }
  auto combos = [&](std::vector<Combination> Certificate::*field) {
    for (std::size_t i = 0; i < (c.*field).size(); ++i)
      for (const auto& [j, q] : (c.*field)[i].cofactors)
        for (std::size_t k = 0; k < q.size(); ++k) {
          Certificate m = c;
          bump_poly((m.*field)[i].cofactors[j], k);
          out.push_back(std::move(m));
        }
  };
  combos(&Certificate::derived_from_original);
  combos(&Certificate::original_from_derived);
  return out;
}

void certificate_soundness(Outcome& o) {
  const fs::path dir = fs::temp_directory_path() / ("binom_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::pair<std::string, Certificate>> certs;
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(fixtures_dir)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  int inconclusive = 0, refused = 0;
  for (const auto& name : names) {
    PolySystem s;
    if (name.ends_with(".sys"))
      s = fixture(name);
    else if (name.ends_with(".crn"))
      s = steady_state_system(parse_network(read_file(fixtures_dir + "/" + name)));
    else
      continue;
    const PipelineReport r = run_recipe(s);
    if (r.verdict == PipelineVerdict::Binomial)
      certs.emplace_back(name + " recipe", *r.certificate);
    else if (r.verdict == PipelineVerdict::Inconclusive)
      ++inconclusive;
    else
      ++refused;
    if (s.all_homogeneous()) {
      const DetectionResult d = detect_binomial_homogeneous(s);
      if (d.verdict == Verdict::Yes) certs.emplace_back(name + " detect", *d.certificate);
    }
  }
  std::size_t replayed = 0, mutated = 0, survived = 0, cli_bad = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto& [name, cert] = certs[i];
    const std::string path = (dir / ("cert" + std::to_string(i) + ".json")).string();
    write_file(path, certificate_to_json(cert).dump());
    const bool ok = verify(cert).ok && run_cli({"certify", path}) == 0;
    o.require(ok, name + " replays");
    replayed += ok;
    const auto ms = mutations(cert);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      ++mutated;
      if (verify(ms[k]).ok) {
        ++survived;
        o.require(false, name + " mutation " + std::to_string(k) + " rejected");
      }
    }
    // the command line sees the first and last mutation too
    for (std::size_t k : {std::size_t(0), ms.size() - 1}) {
      if (ms.empty()) break;
      const std::string bad = (dir / ("bad" + std::to_string(i) + "_" + std::to_string(k) + ".json")).string();
      write_file(bad, certificate_to_json(ms[k]).dump());
      if (run_cli({"certify", bad}) != 1) {
        ++cli_bad;
        o.require(false, name + " mutated file rejected by certify");
      }
    }
  }
  fs::remove_all(dir);
  o.require(!certs.empty(), "some certificates");
  o.detail << replayed << "/" << certs.size() << " certificates replay; " << mutated << " mutations, " << survived
           << " survived, " << cli_bad << " accepted by certify; " << inconclusive << " inconclusive, " << refused
           << " refused";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  app.add_option("--seed", seed, "seed for the random systems")->capture_default_str();
  app.add_option("--fixtures", fixtures_dir, "fixture directory")->capture_default_str();
  app.add_option("--cli", cli_path, "binom executable")->capture_default_str();
  std::vector<int> only;
  app.add_option("--only", only, "run just these criteria");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all = {
      {1, "absorbed quadric: detect", kLimit1, absorbed_quadric},
      {2, "homogenization counterexample: linear pass", kLimit2, homogenization_counterexample},
      {3, "sum of squares: no binomial up to degree 6", kLimit3, sum_of_squares},
      {4, "obfuscated quadric: recipe", kLimit4, obfuscated_quadric},
      {5, "classes modulo x^2 - y^2", kLimit5, classes_mod_difference_of_squares},
      {6, "small network: the seven reference binomials", kLimit6, small_network},
      {7, "large network: prune and rewrite", kLimit7, large_network},
      {8, "random systems: oracle agreement", kLimit8, oracle_agreement},
      {9, "certificates replay, mutations fail", kLimit9, certificate_soundness},
  };
  int unexpected = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[threw: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) {
      o.pass = false;
      o.detail << " [over " << c.limit << " s]";
    }
    const bool known = kKnownRed.count(c.id) > 0;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << (!o.pass && known ? " (known)" : "")
              << "  " << c.name << "  " << std::fixed << std::setprecision(2) << secs << " s  " << o.detail.str()
              << std::endl;
    if (!o.pass && !known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
