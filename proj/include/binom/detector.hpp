#pragma once

// Degree-by-degree binomiality test for homogeneous generators: map the
// lowest-degree generators into k[x]/<B>, row reduce their class vectors,
// refuse on a row with three or more entries, otherwise lift the rows to
// binomials and add them to B.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "binom/certificate.hpp"
#include "binom/polynomial.hpp"

namespace binom {

enum class Verdict { Yes, No };

struct TraceStep {
  std::uint32_t degree = 0;
  std::size_t generators = 0;     // |F_min|
  std::size_t rank = 0;
  std::size_t new_binomials = 0;
  std::vector<std::size_t> absorbed;  // input indices whose image is zero
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DetectionWitness {
  std::uint32_t degree = 0;
  std::vector<std::pair<Monomial, Scalar>> row;  // class representatives and RREF entries
  /// Same row as a combination of the inputs of that degree, reduced mod B.
  Combination from_inputs;
  friend bool operator==(const DetectionWitness&, const DetectionWitness&) = default;
};

struct DetectionResult {
  Verdict verdict = Verdict::Yes;
  Ring ring;
  std::vector<Polynomial> binomials;
  std::optional<DetectionWitness> witness;
  std::vector<TraceStep> trace;
  std::optional<Certificate> certificate;  // on Yes
  friend bool operator==(const DetectionResult&, const DetectionResult&) = default;
};

/// Throws std::invalid_argument naming the first inhomogeneous generator.
DetectionResult detect_binomial_homogeneous(const PolySystem& sys);

/// Appends w*f for every generator f and monomial w != 1 with
/// deg(w*f) <= bound. Throws std::invalid_argument if bound < max degree.
PolySystem extend_with_monomial_multiples(const PolySystem& sys, std::uint32_t bound);

std::string verdict_name(Verdict v);
nlohmann::json detection_to_json(const DetectionResult& r);
DetectionResult detection_from_json(const nlohmann::json& j);

}  // namespace binom
