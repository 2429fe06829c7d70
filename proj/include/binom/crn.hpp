#pragma once

// Mass-action reaction networks and their steady-state polynomials.
//
// Text format, one reaction per line:
//   species: A B C          optional; fixes the variable order
//   A + 2 B -> C ; k1
//   C <-> A + B ; k2, k3    forward and reverse constants
//   0 -> A ; k4             0 is the empty complex
// Species become x1..xn in declaration (or first appearance) order.

#include <map>
#include <string>
#include <vector>

#include "binom/polynomial.hpp"

namespace binom {

struct Reaction {
  std::map<std::size_t, std::uint32_t> reactants;  // species index -> stoichiometry
  std::map<std::size_t, std::uint32_t> products;
  std::string rate;
};

struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;
};

/// Throws ParseError with line and column.
ReactionNetwork parse_network(const std::string& text);

/// f_i = sum_r k_r (product_i - reactant_i) x^reactants(r). Variables are
/// x1..xn; labels carry the species names.
PolySystem steady_state_system(const ReactionNetwork& net);

}  // namespace binom
