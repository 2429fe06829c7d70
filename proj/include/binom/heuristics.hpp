#pragma once

// Heuristics for generators that are not homogeneous: row reduction, the
// detector on homogenized generators, and rewriting with known binomials.
// Every step records a certificate back to the input generators.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "binom/certificate.hpp"
#include "binom/detector.hpp"
#include "binom/gb_oracle.hpp"
#include "binom/linalg.hpp"
#include "binom/polynomial.hpp"

namespace binom {

/// from -> to.second * to.first, or from -> 0 when `to` is empty.
struct RewriteRule {
  Monomial from;
  std::optional<std::pair<Monomial, Scalar>> to;
  std::size_t provenance = 0;  // generator index of the binomial
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// a*u + b*v with u > v gives {u -> (-b/a) v, v -> (-a/b) u}; a monomial a*u
/// gives {u -> 0}. Throws std::invalid_argument on anything longer.
std::vector<RewriteRule> rules_from(const Polynomial& binomial, std::size_t provenance, MonomialOrder order);
/// Rewriting with a rule stops iff `from` does not divide `to`.
bool terminates(const RewriteRule& rule);

enum class RewriteTargets { All, NonBinomial };

struct Rewritten {
  PolySystem system;
  Certificate certificate;  // input -> system
};

/// Rewrites every other generator (or only those with three or more
/// terms) until no term is divisible by rule.from. The source binomial is
/// left alone. Throws std::invalid_argument for a rule that cannot stop.
Rewritten substitute(const PolySystem& sys, const RewriteRule& rule, RewriteTargets targets = RewriteTargets::All);

struct LinearPass {
  PolySystem system;        // nonzero rows of the reduced coefficient matrix
  Certificate certificate;  // input -> system
  bool partitioned = false; // every row has at most two entries
};

LinearPass linear_pass(const PolySystem& sys);

struct HomogenizedDetection {
  PolySystem homogenized;               // the system handed to the detector
  std::string variable;                 // empty if the input was already homogeneous
  DetectionResult detection;
  std::optional<PolySystem> binomials;  // dehomogenized, on Yes
  std::optional<Certificate> certificate;  // input -> binomials, on Yes
};

HomogenizedDetection homogenize_and_detect(const PolySystem& sys);

enum class PipelineVerdict { Binomial, NotBinomialProven, Inconclusive };
std::string pipeline_verdict_name(PipelineVerdict v);

struct StageOutcome {
  std::string stage;    // linear | homogenized | substitution | rehomogenized | groebner
  std::string outcome;  // binomial | not-binomial | inconclusive | skipped
  std::string detail;
  friend bool operator==(const StageOutcome&, const StageOutcome&) = default;
};

struct PipelineReport {
  PipelineVerdict verdict = PipelineVerdict::Inconclusive;
  Ring ring;
  std::vector<Polynomial> input;
  std::vector<StageOutcome> stages;
  std::vector<Polynomial> binomials;
  std::vector<Polynomial> non_binomials;
  std::vector<std::string> moves;          // rewrite moves along the chosen path
  std::optional<Certificate> certificate;  // input -> binomials ++ non_binomials
  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

struct SearchOptions {
  std::size_t max_depth = 8;
  std::size_t branch = 16;
  std::size_t max_expansions = 200;
  /// Rewrite binomials too, not just generators with three or more terms.
  bool rewrite_binomials = false;
};

/// Best-first search over rule orientations. States are scored by
/// (generators with three or more terms, total terms); after every move the
/// state is pruned of linear dependencies and long generators are
/// sparsified pairwise.
PipelineReport substitution_search(const PolySystem& sys, const SearchOptions& options = {});

struct RecipeOptions {
  SearchOptions search;
  bool homogenize_retry = true;
  bool enable_gb_oracle = false;
  GbGuard guard;
};

PipelineReport run_recipe(const PolySystem& sys, const RecipeOptions& options = {});

/// Substitutes 1 for `var` everywhere and drops it from the ring.
Certificate dehomogenize(const Certificate& cert, const std::string& var);

nlohmann::json report_to_json(const PipelineReport& r);
PipelineReport report_from_json(const nlohmann::json& j);

}  // namespace binom
