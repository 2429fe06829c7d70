#include "binom/io.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace binom {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

// Recursive-descent parser over + - * / ^ ( ), integers and identifiers.
// Variables resolve against ring.vars, parameters against ring.params.
class ExprParser {
 public:
  ExprParser(const std::string& text, const Ring& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (d.size() != 1 || !d.terms().begin()->first.is_one()) {
          pos_ = at;
          fail("divisor must not involve variables");
        }
        acc = acc.scaled(d.terms().begin()->second.inv());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      const unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      Polynomial result = Polynomial::constant(ring_.nvars(), Scalar(1));
      for (unsigned long i = 0; i < e; ++i) result = result * base;
      return result;
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(ring_.nvars(), Scalar(Rational(mpz_class(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (auto v = ring_.var_index(name)) return Polynomial::variable(ring_.nvars(), *v);
      if (auto k = ring_.param_index(name))
        return Polynomial::constant(ring_.nvars(), Scalar::parameter(static_cast<std::uint32_t>(*k)));
      pos_ = start;
      fail("unknown identifier '" + name + "' (declare it in vars: or params:)");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring, std::size_t line) {
  return ExprParser(text, ring, line).parse();
}

Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params) {
  Ring ring;
  ring.params = params;
  Polynomial p = parse_polynomial(text, ring);
  if (p.is_zero()) return Scalar();
  return p.terms().begin()->second;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < ring.vars.size() ? ring.vars[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Scalar& s, const Ring& ring) { return s.to_string(ring.params); }

std::string to_string(const Polynomial& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ring.order)) {
    std::string coeff = c.to_string(ring.params);
    if (c.needs_parens()) coeff = "(" + coeff + ")";
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    std::string body;
    if (m.is_one())
      body = coeff;
    else if (coeff == "1")
      body = to_string(m, ring);
    else
      body = coeff + "*" + to_string(m, ring);
    if (first)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

PolySystem parse_system(const std::string& text, MonomialOrder default_order) {
  PolySystem sys;
  sys.ring.order = default_order;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> body;
  std::vector<std::string> labels;
  bool any_label = false;
  static const std::regex label_re(R"(^\s*([A-Za-z][A-Za-z0-9_']*)\s*:(.*)$)");
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, label_re)) {
      const std::string key = m[1];
      if (key == "vars") {
        sys.ring.vars = split_names(m[2]);
        continue;
      }
      if (key == "params") {
        sys.ring.params = split_names(m[2]);
        continue;
      }
      if (key == "order") {
        try {
          sys.ring.order = parse_order(trim(m[2]));
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, 1, e.what());
        }
        continue;
      }
      body.push_back({lineno, m[2]});
      labels.push_back(key);
      any_label = true;
      continue;
    }
    body.push_back({lineno, line});
    labels.emplace_back();
  }
  for (const auto& [ln, expr] : body) sys.generators.push_back(parse_polynomial(expr, sys.ring, ln));
  if (any_label) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i].empty()) labels[i] = "f" + std::to_string(i + 1);
    sys.labels = std::move(labels);
  }
  return sys;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

PolySystem read_system_file(const std::string& path, MonomialOrder default_order) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return system_from_json(nlohmann::json::parse(text));
  return parse_system(text, default_order);
}

std::string format_system(const PolySystem& sys) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : sys.ring.vars) os << ' ' << v;
  os << '\n';
  if (!sys.ring.params.empty()) {
    os << "params:";
    for (const auto& p : sys.ring.params) os << ' ' << p;
    os << '\n';
  }
  os << "order: " << order_name(sys.ring.order) << '\n';
  for (std::size_t i = 0; i < sys.generators.size(); ++i) {
    if (!sys.labels.empty()) os << sys.label(i) << ": ";
    os << to_string(sys.generators[i], sys.ring) << '\n';
  }
  return os.str();
}

nlohmann::json ring_to_json(const Ring& ring) {
  return {{"vars", ring.vars}, {"params", ring.params}, {"order", order_name(ring.order)}};
}

Ring ring_from_json(const nlohmann::json& j) {
  Ring ring;
  ring.vars = j.at("vars").get<std::vector<std::string>>();
  ring.params = j.value("params", std::vector<std::string>{});
  ring.order = parse_order(j.value("order", std::string("grevlex")));
  return ring;
}

nlohmann::json system_to_json(const PolySystem& sys) {
  nlohmann::json j = ring_to_json(sys.ring);
  std::vector<std::string> gens;
  for (const auto& g : sys.generators) gens.push_back(to_string(g, sys.ring));
  j["generators"] = gens;
  if (!sys.labels.empty()) j["labels"] = sys.labels;
  return j;
}

PolySystem system_from_json(const nlohmann::json& j) {
  PolySystem sys;
  sys.ring = ring_from_json(j);
  std::size_t i = 0;
  for (const auto& g : j.at("generators")) sys.generators.push_back(parse_polynomial(g.get<std::string>(), sys.ring, ++i));
  sys.labels = j.value("labels", std::vector<std::string>{});
  return sys;
}

}  // namespace binom
