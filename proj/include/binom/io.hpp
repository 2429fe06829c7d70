#pragma once

// Text and JSON formats for scalars, polynomials and systems.
//
// System file:
//   # comment
//   vars: x y z
//   params: k1 k2
//   order: grevlex          (optional)
//   x - y                   one generator per line
//   f2: k1*x^2 - k2*y*z     optional "label:" prefix

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "binom/polynomial.hpp"

namespace binom {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Polynomial parse_polynomial(const std::string& text, const Ring& ring, std::size_t line = 1);
Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params);

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const Polynomial& p, const Ring& ring);
std::string to_string(const Scalar& s, const Ring& ring);

/// `default_order` applies when the text has no "order:" line.
PolySystem parse_system(const std::string& text, MonomialOrder default_order = MonomialOrder::GRevLex);
PolySystem read_system_file(const std::string& path, MonomialOrder default_order = MonomialOrder::GRevLex);
std::string format_system(const PolySystem& sys);

nlohmann::json ring_to_json(const Ring& ring);
Ring ring_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const PolySystem& sys);
PolySystem system_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace binom
