#pragma once

// Sparse exact multivariate (and Laurent) polynomials with a weighted grading.
//
// Terms are kept in a map ordered by the fixed monomial order: larger weighted
// degree first, ties broken by the exponent vector compared lexicographically
// (larger first). Iteration therefore visits terms in descending order, which
// is also the order used by every renderer.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "isogr/coefficients.hpp"
#include "isogr/errors.hpp"

namespace isogr {

class GradingSpec {
 public:
  GradingSpec() = default;
  GradingSpec(std::vector<std::string> names, std::vector<int> degrees)
      : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) {
      throw StructuralError("grading: names and degrees differ in length");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (degrees_[i] <= 0) throw StructuralError("grading: variable " + names_[i] + " has non-positive degree");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw StructuralError("grading: duplicate variable " + names_[i]);
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  int weighted_degree(std::span<const int> exps) const {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * degrees_[i];
    return d;
  }

  friend bool operator==(const GradingSpec&, const GradingSpec&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using GradingPtr = std::shared_ptr<const GradingSpec>;

inline GradingPtr make_grading(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GradingSpec>(std::move(names), std::move(degrees));
}

/// Variables prefix1..prefixN with degrees step, 2*step, ..., N*step.
inline GradingPtr indexed_grading(const std::string& prefix, int count, int step) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 1; i <= count; ++i) {
    names.push_back(prefix + std::to_string(i));
    degrees.push_back(step * i);
  }
  return make_grading(std::move(names), std::move(degrees));
}

inline bool same_grading(const GradingPtr& a, const GradingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Exponent vector with its cached weighted degree.
class Monomial {
 public:
  Monomial() = default;
  Monomial(const GradingSpec& g, std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.size() != g.size()) throw StructuralError("monomial length does not match grading");
    degree_ = g.weighted_degree(exps_);
  }

  static Monomial one(const GradingSpec& g) { return Monomial(g, std::vector<int>(g.size(), 0)); }

  const std::vector<int>& exps() const { return exps_; }
  int exp(std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }
  bool has_negative() const {
    return std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    r.degree_ += o.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Strict weak order placing the larger monomial first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exps() > b.exps();
  }
};

template <class C, bool Laurent = false>
class BasicPolynomial {
 public:
  using coefficient_type = C;
  using TermMap = std::map<Monomial, C, MonomialOrder>;
  static constexpr bool is_laurent = Laurent;

  BasicPolynomial() = default;
  explicit BasicPolynomial(GradingPtr g) : grading_(std::move(g)) {
    if (!grading_) throw StructuralError("polynomial requires a grading");
  }

  static BasicPolynomial constant(GradingPtr g, const C& c) {
    BasicPolynomial p(std::move(g));
    p.add_term(Monomial::one(*p.grading_), c);
    return p;
  }
  static BasicPolynomial variable(GradingPtr g, std::size_t i) {
    BasicPolynomial p(std::move(g));
    std::vector<int> e(p.grading_->size(), 0);
    e.at(i) = 1;
    p.add_term(Monomial(*p.grading_, std::move(e)), C(1));
    return p;
  }
  static BasicPolynomial monomial(GradingPtr g, std::vector<int> exps, const C& c = C(1)) {
    BasicPolynomial p(std::move(g));
    p.add_term(Monomial(*p.grading_, std::move(exps)), c);
    return p;
  }

  const GradingPtr& grading() const { return grading_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Accumulates c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const C& c) {
    if (!Laurent && m.has_negative()) throw StructuralError("negative exponent in a non-Laurent polynomial");
    if (isogr::is_zero(c)) return;
    C v = c;
    if constexpr (std::is_same_v<C, mpq_class>) v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (isogr::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Largest weighted degree among the terms; undefined for zero.
  int degree() const {
    if (terms_.empty()) throw StructuralError("degree of the zero polynomial is undefined");
    return terms_.begin()->first.degree();
  }
  int low_degree() const {
    if (terms_.empty()) throw StructuralError("degree of the zero polynomial is undefined");
    return terms_.rbegin()->first.degree();
  }

  std::set<int> degrees() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) out.insert(m.degree());
    return out;
  }

  bool is_homogeneous() const { return degrees().size() <= 1; }

  BasicPolynomial graded_component(int d) const {
    BasicPolynomial r(grading_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  BasicPolynomial& operator*=(const C& s) {
    if (isogr::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = isogr::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const C& s) { return a *= s; }
  friend BasicPolynomial operator*(const C& s, BasicPolynomial a) { return a *= s; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_compatible(b);
    BasicPolynomial r(a.grading_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  BasicPolynomial pow(int e) const {
    if (e < 0) throw DomainError("negative power of a polynomial");
    BasicPolynomial r = constant(grading_, C(1));
    BasicPolynomial base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return same_grading(a.grading_, b.grading_) && a.terms_ == b.terms_;
  }

  void check_compatible(const BasicPolynomial& o) const {
    if (!same_grading(grading_, o.grading_)) throw StructuralError("polynomials over different gradings");
  }

 private:
  GradingPtr grading_;
  TermMap terms_;
};

template <class C>
using Polynomial = BasicPolynomial<C, false>;
using ZPoly = Polynomial<mpz_class>;
using QPoly = Polynomial<mpq_class>;
using F2Poly = Polynomial<Gf2>;
using LaurentPolynomial = BasicPolynomial<mpq_class, true>;

/// Applies coeff_cast to every coefficient; the grading is kept.
template <class To, class From, bool L>
BasicPolynomial<To, L> change_coefficients(const BasicPolynomial<From, L>& p) {
  BasicPolynomial<To, L> r(p.grading());
  for (const auto& [m, c] : p.terms()) r.add_term(m, coeff_cast<To>(c));
  return r;
}

/// Same exponent vectors read in another grading of equal length.
template <class C, bool L>
BasicPolynomial<C, L> regrade(const BasicPolynomial<C, L>& p, GradingPtr target) {
  if (target->size() != p.grading()->size()) throw StructuralError("regrade: variable counts differ");
  BasicPolynomial<C, L> r(target);
  for (const auto& [m, c] : p.terms()) r.add_term(Monomial(*target, m.exps()), c);
  return r;
}

/// All exponent vectors of weighted degree exactly d, in descending monomial
/// order. When allowed is given, only the listed variables may occur.
inline std::vector<Monomial> monomials_of_degree(const GradingSpec& g, int d,
                                                 std::optional<std::vector<std::size_t>> allowed = std::nullopt) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<char> ok(g.size(), allowed ? 0 : 1);
  if (allowed) {
    for (std::size_t v : *allowed) ok.at(v) = 1;
  }
  std::vector<int> exps(g.size(), 0);
  // Depth-first with the first variable's exponent descending gives lex-descending output.
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
    if (var == g.size()) {
      if (remaining == 0) out.emplace_back(g, exps);
      return;
    }
    const int w = g.degree(var);
    const int top = ok[var] ? remaining / w : 0;
    for (int e = top; e >= 0; --e) {
      exps[var] = e;
      rec(var + 1, remaining - e * w);
    }
    exps[var] = 0;
  };
  rec(0, d);
  return out;
}

/// Ring homomorphism defined on generators. images[i] is the image of
/// variable i; a missing image is only an error if the variable occurs.
template <class Target, class C>
Target substitute(const Polynomial<C>& p, const std::vector<std::optional<Target>>& images, GradingPtr target_grading) {
  using TC = typename Target::coefficient_type;
  const std::size_t nv = p.grading()->size();
  if (images.size() != nv) throw StructuralError("substitute: image list length does not match grading");
  for (const auto& img : images) {
    if (img && !same_grading(img->grading(), target_grading)) {
      throw StructuralError("substitute: images over different gradings");
    }
  }
  std::vector<std::vector<Target>> powers(nv);
  auto power = [&](std::size_t v, int e) -> const Target& {
    if (!images[v]) throw StructuralError("substitute: no image for variable " + p.grading()->name(v));
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Target::constant(target_grading, TC(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };
  Target out(target_grading);
  for (const auto& [m, c] : p.terms()) {
    Target term = Target::constant(target_grading, coeff_cast<TC>(c));
    for (std::size_t v = 0; v < nv; ++v) {
      if (m.exp(v) > 0) term *= power(v, m.exp(v));
    }
    out += term;
  }
  return out;
}

}  // namespace isogr
