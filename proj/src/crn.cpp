#include "binom/crn.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "binom/io.hpp"

namespace binom {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

class NetworkParser {
 public:
  ReactionNetwork parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      const std::string line = raw.substr(0, raw.find('#'));
      if (trim(line).empty()) continue;
      static const std::regex header(R"(^\s*species\s*:(.*)$)");
      std::smatch m;
      if (std::regex_match(line, m, header)) {
        std::istringstream names(m[1].str());
        std::string name;
        while (names >> name) {
          if (!name.empty() && name.back() == ',') name.pop_back();
          if (name.empty()) continue;
          check_name(name, line);
          if (index_.count(name)) fail(line, name, "species '" + name + "' declared twice");
          add_species(name);
        }
        continue;
      }
      reaction(line);
    }
    if (net_.species.empty()) throw ParseError(line_ == 0 ? 1 : line_, 1, "network has no species");
    return std::move(net_);
  }

 private:
  [[noreturn]] void fail(const std::string& line, const std::string& near, const std::string& msg) const {
    const auto at = line.find(near);
    throw ParseError(line_, at == std::string::npos ? 1 : at + 1, msg);
  }

  void check_name(const std::string& name, const std::string& line) const {
    static const std::regex ident(R"([A-Za-z][A-Za-z0-9_]*)");
    if (!std::regex_match(name, ident)) fail(line, name, "bad name '" + name + "'");
  }

  std::size_t add_species(const std::string& name) {
    auto [it, fresh] = index_.emplace(name, net_.species.size());
    if (fresh) net_.species.push_back(name);
    return it->second;
  }

  std::map<std::size_t, std::uint32_t> complex(const std::string& text, const std::string& line) {
    std::map<std::size_t, std::uint32_t> out;
    const std::string t = trim(text);
    if (t.empty()) fail(line, text, "empty complex (write 0)");
    if (t == "0") return out;
    std::size_t start = 0;
    while (start <= t.size()) {
      const std::size_t plus = t.find('+', start);
      const std::string term = trim(t.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
      static const std::regex re(R"(^(\d+)?\s*\*?\s*([A-Za-z][A-Za-z0-9_]*)$)");
      std::smatch m;
      if (!std::regex_match(term, m, re)) fail(line, term.empty() ? "+" : term, "bad species term '" + term + "'");
      const std::uint32_t coeff = m[1].matched ? static_cast<std::uint32_t>(std::stoul(m[1].str())) : 1;
      if (coeff > 0) out[add_species(m[2].str())] += coeff;
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    return out;
  }

  void reaction(const std::string& line) {
    const auto semi = line.find(';');
    if (semi == std::string::npos) fail(line, line, "missing '; rate' after the reaction");
    const std::string lhs_rhs = line.substr(0, semi);
    std::vector<std::string> rates;
    {
      std::string r = line.substr(semi + 1);
      std::replace(r.begin(), r.end(), ',', ' ');
      std::istringstream rs(r);
      std::string k;
      while (rs >> k) {
        check_name(k, line);
        if (!rate_names_.insert(k).second) fail(line, k, "rate constant '" + k + "' used twice");
        rates.push_back(k);
      }
    }
    bool reversible = false;
    std::size_t arrow = lhs_rhs.find("<->");
    std::size_t width = 3;
    if (arrow != std::string::npos) {
      reversible = true;
    } else {
      arrow = lhs_rhs.find("->");
      width = 2;
    }
    if (arrow == std::string::npos) fail(line, line, "missing '->' or '<->'");
    if (rates.size() != (reversible ? 2u : 1u))
      fail(line, line.substr(semi), reversible ? "reversible reaction needs two rate constants" : "reaction needs one rate constant");
    const auto lhs = complex(lhs_rhs.substr(0, arrow), line);
    const auto rhs = complex(lhs_rhs.substr(arrow + width), line);
    net_.reactions.push_back({lhs, rhs, rates[0]});
    if (reversible) net_.reactions.push_back({rhs, lhs, rates[1]});
  }

  ReactionNetwork net_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> rate_names_;
  std::size_t line_ = 0;
};

}  // namespace

ReactionNetwork parse_network(const std::string& text) { return NetworkParser().parse(text); }

PolySystem steady_state_system(const ReactionNetwork& net) {
  PolySystem sys;
  const std::size_t n = net.species.size();
  for (std::size_t i = 0; i < n; ++i) sys.ring.vars.push_back("x" + std::to_string(i + 1));
  std::map<std::string, std::uint32_t> param;
  for (const auto& r : net.reactions)
    if (param.emplace(r.rate, static_cast<std::uint32_t>(sys.ring.params.size())).second) sys.ring.params.push_back(r.rate);
  sys.generators.assign(n, Polynomial());
  for (const auto& r : net.reactions) {
    Monomial rate_mono(n);
    for (const auto& [s, c] : r.reactants) rate_mono[s] = c;
    const Scalar k = Scalar::parameter(param.at(r.rate));
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = r.products.count(i) ? r.products.at(i) : 0u;
      const auto q = r.reactants.count(i) ? r.reactants.at(i) : 0u;
      if (p == q) continue;
      sys.generators[i].add_term(rate_mono, k * Scalar(static_cast<long>(p) - static_cast<long>(q)));
    }
  }
  sys.labels = net.species;
  return sys;
}

}  // namespace binom
