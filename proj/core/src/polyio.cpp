#include "commfam/polyio.hpp"

#include <cctype>
#include <sstream>

#include "commfam/errors.hpp"

namespace commfam {

namespace {

std::string monomial_str(const Monomial& m) {
  // parameters print before coordinates (they act as coefficients)
  std::vector<Monomial::Factor> ordered;
  for (const auto& f : m.factors())
    if (f.first.kind() == VarKind::Parameter) ordered.push_back(f);
  for (const auto& f : m.factors())
    if (f.first.kind() == VarKind::Coordinate) ordered.push_back(f);
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : ordered) {
    if (!first) os << "*";
    os << VarRegistry::instance().label(v);
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (m.is_unit()) {
      os << rat_str(a);
    } else if (a == 1) {
      os << monomial_str(m);
    } else {
      os << rat_str(a) << "*" << monomial_str(m);
    }
    first = false;
  }
  return os.str();
}

std::string ratfunc_to_string(const RatFunc& f) {
  if (f.is_polynomial()) return poly_to_string(f.num());
  return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail(ErrorCode::Parse, "expected number at position " + std::to_string(i));
    return s.substr(start, i - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    if (i < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (start == i) fail(ErrorCode::Parse, "expected identifier at position " + std::to_string(i));
    return s.substr(start, i - start);
  }
};

VarId resolve(const std::string& name, const LabelMap& labels) {
  auto it = labels.find(name);
  if (it == labels.end()) fail(ErrorCode::Parse, "unknown variable: " + name);
  return it->second;
}

}  // namespace

Poly poly_parse(const std::string& text, const LabelMap& labels) {
  Lexer lx{text};
  Poly result;
  bool expect_term = true;
  int sign = 1;
  if (lx.accept('-')) sign = -1;
  while (true) {
    if (lx.done()) {
      if (expect_term) fail(ErrorCode::Parse, "dangling sign in polynomial: " + text);
      break;
    }
    // term
    Rational coeff(sign);
    std::vector<Monomial::Factor> factors;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.number();
      std::string lit = num;
      if (lx.accept('/')) lit += "/" + lx.number();
      coeff *= rat_parse(lit);
      saw_anything = true;
      if (!lx.accept('*')) {
        // bare constant term
        result.add_term(Monomial{}, coeff);
        goto term_done;
      }
    }
    while (true) {
      std::string name = lx.ident();
      uint32_t exp = 1;
      if (lx.accept('^')) exp = static_cast<uint32_t>(std::stoul(lx.number()));
      factors.push_back({resolve(name, labels), exp});
      saw_anything = true;
      if (!lx.accept('*')) break;
    }
    result.add_term(Monomial(std::move(factors)), coeff);
  term_done:
    if (!saw_anything) fail(ErrorCode::Parse, "empty term in polynomial: " + text);
    expect_term = false;
    if (lx.done()) break;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else {
      fail(ErrorCode::Parse, "unexpected character at position " + std::to_string(lx.i) +
                                 " in: " + text);
    }
    expect_term = true;
  }
  return result;
}

}  // namespace commfam
