// binom: decide whether polynomial generators span a binomial ideal.
//
// exit status: 0 binomial / yes, 1 not binomial (proven), 2 inconclusive,
// 3 usage or input error, 4 anything else

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "binom/certificate.hpp"
#include "binom/crn.hpp"
#include "binom/detector.hpp"
#include "binom/gb_oracle.hpp"
#include "binom/heuristics.hpp"
#include "binom/io.hpp"

using namespace binom;

namespace {

constexpr int kYes = 0, kNo = 1, kInconclusive = 2, kUsage = 3, kFailure = 4;

struct Config {
  bool json = false;
  std::string order;  // empty: from the file, else BINOM_ORDER, else grevlex
  std::string input;
  std::string certificate_out;
  std::string output;
  RecipeOptions recipe;
  bool no_retry = false;
  bool slow_ok = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MonomialOrder default_order() {
  const char* env = std::getenv("BINOM_ORDER");
  if (!env || !*env) return MonomialOrder::GRevLex;
  try {
    return parse_order(env);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("BINOM_ORDER: ") + e.what());
  }
}

PolySystem load(const Config& cfg) {
  PolySystem sys = read_system_file(cfg.input, default_order());
  if (!cfg.order.empty()) sys.ring.order = parse_order(cfg.order);
  return sys;
}

void write_certificate(const Config& cfg, const std::optional<Certificate>& cert) {
  if (cfg.certificate_out.empty()) return;
  if (!cert) throw std::runtime_error("no certificate to write");
  write_file(cfg.certificate_out, certificate_to_json(*cert).dump(2) + "\n");
}

void print_list(std::ostream& os, const std::string& title, const std::vector<Polynomial>& ps, const Ring& ring) {
  os << title << ":";
  if (ps.empty()) os << " (none)";
  os << '\n';
  for (const auto& p : ps) os << "  " << to_string(p, ring) << '\n';
}

int run_detect(const Config& cfg) {
  const PolySystem sys = load(cfg);
  const DetectionResult r = detect_binomial_homogeneous(sys);
  write_certificate(cfg, r.certificate);
  if (cfg.json) {
    std::cout << detection_to_json(r).dump(2) << '\n';
  } else {
    std::cout << "verdict: " << verdict_name(r.verdict) << '\n';
    print_list(std::cout, "binomials", r.binomials, r.ring);
    if (r.witness) {
      std::cout << "witness row in degree " << r.witness->degree << ":";
      for (const auto& [m, c] : r.witness->row) std::cout << "  (" << to_string(c, r.ring) << ")*" << to_string(m, r.ring);
      std::cout << '\n';
    }
    std::cout << "trace:\n";
    for (const auto& t : r.trace) {
      std::cout << "  degree " << t.degree << ": " << t.generators << " generators, rank " << t.rank << ", "
                << t.new_binomials << " new binomials";
      if (!t.absorbed.empty()) {
        std::cout << ", absorbed";
        for (auto i : t.absorbed) std::cout << ' ' << sys.label(i);
      }
      std::cout << '\n';
    }
  }
  return r.verdict == Verdict::Yes ? kYes : kNo;
}

int run_recipe_cmd(Config cfg) {
  const PolySystem sys = load(cfg);
  cfg.recipe.homogenize_retry = !cfg.no_retry;
  const PipelineReport r = run_recipe(sys, cfg.recipe);
  write_certificate(cfg, r.certificate);
  if (cfg.json) {
    std::cout << report_to_json(r).dump(2) << '\n';
  } else {
    std::cout << "verdict: " << pipeline_verdict_name(r.verdict) << '\n';
    std::cout << "stages:\n";
    for (const auto& s : r.stages) {
      std::cout << "  " << s.stage << ": " << s.outcome;
      if (!s.detail.empty()) std::cout << " (" << s.detail << ")";
      std::cout << '\n';
    }
    if (!r.moves.empty()) {
      std::cout << "moves:\n";
      for (const auto& m : r.moves) std::cout << "  " << m << '\n';
    }
    print_list(std::cout, "binomials", r.binomials, r.ring);
    if (!r.non_binomials.empty()) print_list(std::cout, "longer generators", r.non_binomials, r.ring);
  }
  switch (r.verdict) {
    case PipelineVerdict::Binomial: return kYes;
    case PipelineVerdict::NotBinomialProven: return kNo;
    default: return kInconclusive;
  }
}

int run_crn(const Config& cfg) {
  const PolySystem sys = steady_state_system(parse_network(read_file(cfg.input)));
  const std::string text = cfg.json ? system_to_json(sys).dump(2) + "\n" : format_system(sys);
  if (cfg.output.empty())
    std::cout << text;
  else
    write_file(cfg.output, text);
  return kYes;
}

int run_oracle(const Config& cfg) {
  const PolySystem sys = load(cfg);
  GbGuard guard = cfg.recipe.guard;
  guard.enforce = !cfg.slow_ok;
  GroebnerBasis gb;
  try {
    gb = buchberger(sys, sys.ring.order, guard);
  } catch (const GuardExceeded& e) {
    std::cerr << "binom: " << e.what() << " (pass --i-know-this-is-slow to lift the guard)\n";
    return kInconclusive;
  }
  const bool binomial = std::all_of(gb.elements.begin(), gb.elements.end(), [](const Polynomial& p) { return p.is_binomial(); });
  if (cfg.json) {
    std::vector<std::string> els;
    for (const auto& p : gb.elements) els.push_back(to_string(p, sys.ring));
    std::cout << nlohmann::json{{"order", order_name(gb.order)}, {"basis", els}, {"binomial", binomial}}.dump(2) << '\n';
  } else {
    std::cout << "binomial: " << (binomial ? "yes" : "no") << '\n';
    print_list(std::cout, "reduced basis, " + order_name(gb.order), gb.elements, sys.ring);
  }
  return binomial ? kYes : kNo;
}

int run_certify(const Config& cfg) {
  nlohmann::json j = nlohmann::json::parse(read_file(cfg.input));
  // a whole report or detection result carries its certificate inside
  if (j.contains("certificate")) j = j["certificate"];
  else if (j.contains("certificates")) j = j["certificates"];
  if (j.is_null()) throw UsageError("file holds no certificate");
  const CertificateCheck c = verify(certificate_from_json(j));
  if (cfg.json) {
    std::cout << nlohmann::json{{"ok", c.ok}, {"failures", c.failures}}.dump(2) << '\n';
  } else {
    std::cout << (c.ok ? "certificate holds" : "certificate FAILS") << '\n';
    for (const auto& f : c.failures) std::cout << "  " << f << '\n';
  }
  return c.ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomiality of polynomial ideals"};
  app.require_subcommand(1);
  Config cfg;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--order", cfg.order, "monomial order: lex, grlex, grevlex (default: file, then $BINOM_ORDER)")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));

  auto* detect = app.add_subcommand("detect", "degree-by-degree test on homogeneous generators");
  detect->add_option("file", cfg.input, "system file")->required()->check(CLI::ExistingFile);
  detect->add_option("--certificate", cfg.certificate_out, "write the certificate (JSON) here");

  auto* recipe = app.add_subcommand("recipe", "linear pass, homogenization, rewriting, optional Groebner basis");
  recipe->add_option("file", cfg.input, "system file")->required()->check(CLI::ExistingFile);
  recipe->add_option("--certificate", cfg.certificate_out, "write the certificate (JSON) here");
  recipe->add_option("--max-depth", cfg.recipe.search.max_depth, "rewrite search depth")->capture_default_str()->check(CLI::Range(1, 1 << 20));
  recipe->add_option("--branch", cfg.recipe.search.branch, "children kept per state")->capture_default_str()->check(CLI::Range(1, 1 << 20));
  recipe->add_option("--max-expansions", cfg.recipe.search.max_expansions, "states expanded before giving up")->capture_default_str();
  recipe->add_flag("--rewrite-binomials", cfg.recipe.search.rewrite_binomials, "let rules rewrite binomials too");
  recipe->add_flag("--no-homogenize-retry", cfg.no_retry, "skip detection on the rewritten generators");
  recipe->add_flag("--enable-gb-oracle", cfg.recipe.enable_gb_oracle, "last resort: guarded Groebner basis");

  auto* crn = app.add_subcommand("crn", "reaction network to steady-state system");
  crn->add_option("file", cfg.input, "network file")->required()->check(CLI::ExistingFile);
  crn->add_option("-o,--output", cfg.output, "write the system here instead of stdout");

  auto* oracle = app.add_subcommand("oracle-gb", "reduced Groebner basis (small inputs only)");
  oracle->add_option("file", cfg.input, "system file")->required()->check(CLI::ExistingFile);
  oracle->add_flag("--i-know-this-is-slow", cfg.slow_ok, "lift the size guard");

  auto* certify = app.add_subcommand("certify", "replay a certificate; exit 0 iff every identity holds");
  certify->add_option("file", cfg.input, "certificate, detection or report JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*detect) return run_detect(cfg);
    if (*recipe) return run_recipe_cmd(cfg);
    if (*crn) return run_crn(cfg);
    if (*oracle) return run_oracle(cfg);
    if (*certify) return run_certify(cfg);
  } catch (const ParseError& e) {
    std::cerr << cfg.input << ":" << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "binom: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << cfg.input << ": bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "binom: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "binom: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
