#pragma once

// Text and JSON forms of polynomials.
//
// Text: terms in descending monomial order, e.g. "c1^2 - 2*c2" or
// "3/4*t1^2*t2^-1 + 1". The parser accepts the same grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | name ['^' ['-'] integer]
//
// JSON: {"vars":[...], "degrees":[...], "terms":[{"exp":[...], "coef":"..."}]}
// with terms in the same order and coefficients as decimal strings.

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isogr/polynomial.hpp"

namespace isogr {

template <class C, bool L>
std::string to_string(const BasicPolynomial<C, L>& p) {
  if (p.is_zero()) return "0";
  using T = coeff_traits<C>;
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    C mag = c;
    const bool neg = T::is_negative(c);
    if (neg) mag = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string factors;
    for (std::size_t v = 0; v < m.exps().size(); ++v) {
      const int e = m.exp(v);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += p.grading()->name(v);
      if (e != 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      os << T::to_string(mag);
    } else if (T::is_one(mag)) {
      os << factors;
    } else {
      os << T::to_string(mag) << '*' << factors;
    }
  }
  return os.str();
}

template <class C, bool L>
nlohmann::json to_json(const BasicPolynomial<C, L>& p) {
  nlohmann::json j;
  j["vars"] = p.grading()->names();
  j["degrees"] = p.grading()->degrees();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"exp", m.exps()}, {"coef", coeff_traits<C>::to_string(c)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class C, bool L = false>
BasicPolynomial<C, L> polynomial_from_json(const nlohmann::json& j) {
  try {
    auto g = make_grading(j.at("vars").get<std::vector<std::string>>(), j.at("degrees").get<std::vector<int>>());
    BasicPolynomial<C, L> p(g);
    for (const auto& t : j.at("terms")) {
      p.add_term(Monomial(*g, t.at("exp").get<std::vector<int>>()),
                 coeff_traits<C>::parse(t.at("coef").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  template <class C, bool L>
  BasicPolynomial<C, L> parse(const GradingPtr& g) {
    BasicPolynomial<C, L> out(g);
    skip();
    if (pos_ == s_.size()) throw StructuralError("empty polynomial expression");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_++] == '-') ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exps] = term<C>(*g);
      if (sign < 0) coef = -coef;
      out.add_term(Monomial(*g, std::move(exps)), coef);
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  template <class C>
  std::pair<C, std::vector<int>> term(const GradingSpec& g) {
    C coef(1);
    std::vector<int> exps(g.size(), 0);
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string lit = digits();
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          lit += "/" + digits();
        }
        coef *= coeff_traits<C>::parse(lit);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        auto idx = g.index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        int e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          int sign = 1;
          if (peek() == '-') {
            sign = -1;
            ++pos_;
          }
          e = sign * std::stoi(digits());
        }
        exps[*idx] += e;
      } else {
        fail("expected a number or variable");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {coef, exps};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class C, bool L = false>
BasicPolynomial<C, L> parse_polynomial(std::string_view text, const GradingPtr& g) {
  return detail::PolyParser(text).parse<C, L>(g);
}

template <class C, bool L>
std::ostream& operator<<(std::ostream& os, const BasicPolynomial<C, L>& p) {
  return os << to_string(p);
}

}  // namespace isogr
