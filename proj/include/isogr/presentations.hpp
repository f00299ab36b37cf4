#pragma once

// Presentations of H*(IG(n-k, 2n)), H*(OG(n-k, 2n+1)) and of their stable
// limits, together with the degreewise quotient engine.
//
// Generators are c_i (type C) or tau_i (type B), both of degree 2i. Outside
// the generator range the conventions c_0 = tau_0 = 1 and c_q = tau_q = 0
// (q < 0 or q beyond the last generator) apply.
//
// A GradedQuotient computes, for each degree d up to an even cap, the ideal
// component I_d spanned by all products m * r (r a relation, m a monomial)
// as an integer row echelon form whose pivot in each row is its smallest
// monomial. The quotient basis is the set of non-pivot monomials, so normal
// forms prefer the larger monomials (powers of c_1 before c_2, ...).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "isogr/linalg.hpp"
#include "isogr/polynomial.hpp"
#include "isogr/polynomial_io.hpp"

namespace isogr {

enum class Family { FiniteC, FiniteB, StableC, StableB };
enum class LieType { C, B };
enum class GeneratorKind { C, Tau };

inline bool is_stable(Family f) { return f == Family::StableC || f == Family::StableB; }
inline LieType lie_type(Family f) {
  return (f == Family::FiniteC || f == Family::StableC) ? LieType::C : LieType::B;
}
inline std::string to_string(Family f) {
  switch (f) {
    case Family::FiniteC: return "FiniteC";
    case Family::FiniteB: return "FiniteB";
    case Family::StableC: return "StableC";
    case Family::StableB: return "StableB";
  }
  return "?";
}

/// delta_p = 1 if p <= k and 2 otherwise (so delta_0 = 1).
inline int delta(int p, int k) { return p <= k ? 1 : 2; }

inline GradingPtr c_grading(int count) { return indexed_grading("c", count, 2); }
inline GradingPtr tau_grading(int count) { return indexed_grading("tau", count, 2); }

/// x_r under the index conventions: 1 for r = 0, 0 outside 1..size.
inline ZPoly generator_or_constant(const GradingPtr& g, int r) {
  if (r == 0) return ZPoly::constant(g, 1);
  if (r < 0 || r > static_cast<int>(g->size())) return ZPoly(g);
  return ZPoly::variable(g, static_cast<std::size_t>(r - 1));
}

/// det(a_{1+j-i})_{1<=i,j<=p} with a_r = x_r, or a_r = delta_r * x_r when
/// delta_k is given. Expanded along the first row of the Hessenberg matrix:
/// D_p = sum_{r=1}^p (-1)^{r-1} a_0^{r-1} a_r D_{p-r}, D_0 = 1.
inline ZPoly jacobi_determinant(int p, const GradingPtr& g, std::optional<int> delta_k = std::nullopt) {
  if (p < 0) throw DomainError("determinant size must be non-negative");
  auto entry = [&](int r) {
    ZPoly x = generator_or_constant(g, r);
    if (delta_k) x *= mpz_class(delta(r, *delta_k));
    return x;
  };
  const ZPoly a0 = entry(0);
  std::vector<ZPoly> dets{ZPoly::constant(g, 1)};
  for (int q = 1; q <= p; ++q) {
    ZPoly acc(g);
    ZPoly a0_pow = ZPoly::constant(g, 1);
    for (int r = 1; r <= q; ++r) {
      ZPoly term = a0_pow * entry(r) * dets[q - r];
      if (r % 2 == 0) term = -term;
      acc += term;
      a0_pow *= a0;
    }
    dets.push_back(std::move(acc));
  }
  return dets[p];
}

/// c_s^2 + 2 sum_{i=1}^s (-1)^i c_{s+i} c_{s-i}.
inline ZPoly quadratic_relation_c(int s, const GradingPtr& g) {
  ZPoly out = generator_or_constant(g, s).pow(2);
  for (int i = 1; i <= s; ++i) {
    ZPoly t = generator_or_constant(g, s + i) * generator_or_constant(g, s - i);
    t *= mpz_class(i % 2 ? -2 : 2);
    out += t;
  }
  return out;
}

/// tau_s^2 + sum_{i=1}^s (-1)^i delta_{s-i} tau_{s+i} tau_{s-i}.
inline ZPoly quadratic_relation_b(int s, int k, const GradingPtr& g) {
  ZPoly out = generator_or_constant(g, s).pow(2);
  for (int i = 1; i <= s; ++i) {
    ZPoly t = generator_or_constant(g, s + i) * generator_or_constant(g, s - i);
    t *= mpz_class((i % 2 ? -1 : 1) * delta(s - i, k));
    out += t;
  }
  return out;
}

struct RingPresentation {
  Family family = Family::FiniteC;
  int n = 0;
  int k = 0;
  int degree_cap = 0;  // truncation degree of a stable presentation; 0 when finite
  GeneratorKind generators = GeneratorKind::C;
  GradingPtr grading;
  std::vector<std::string> relation_names;
  std::vector<ZPoly> relations;
  bool no_relations_below_cap = false;  // stable cap too small to contain any relation

  std::string describe() const {
    std::string s = "family=" + std::string(lie_type(family) == LieType::C ? "C" : "B");
    if (is_stable(family)) {
      s += " stable k=" + std::to_string(k) + " degree-cap=" + std::to_string(degree_cap);
    } else {
      s += " n=" + std::to_string(n) + " k=" + std::to_string(k);
    }
    if (generators == GeneratorKind::C && lie_type(family) == LieType::B) s += " c-subring";
    return s;
  }

  void add(std::string name, ZPoly r) {
    if (!r.is_homogeneous()) throw StructuralError("relation " + name + " is not homogeneous");
    relation_names.push_back(std::move(name));
    relations.push_back(std::move(r));
  }
};

inline void check_finite_params(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("n and k must be non-negative");
  if (k > n) throw DomainError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

/// Z[c_1..c_{n+k}] modulo R^p (n-k+1 <= p <= n+k) and S^s (k+1 <= s <= n).
inline RingPresentation finite_c_presentation(int n, int k) {
  check_finite_params(n, k);
  RingPresentation pres;
  pres.family = Family::FiniteC;
  pres.n = n;
  pres.k = k;
  pres.generators = GeneratorKind::C;
  pres.grading = c_grading(n + k);
  for (int p = n - k + 1; p <= n + k; ++p) pres.add("R" + std::to_string(p), jacobi_determinant(p, pres.grading));
  for (int s = k + 1; s <= n; ++s) pres.add("S" + std::to_string(s), quadratic_relation_c(s, pres.grading));
  return pres;
}

/// Z[tau_1..tau_{n+k}] modulo the weighted determinants (n-k+1 <= p <= n),
/// the alternating sums (n+1 <= p <= n+k) and the quadratic relations.
inline RingPresentation finite_b_presentation(int n, int k) {
  check_finite_params(n, k);
  RingPresentation pres;
  pres.family = Family::FiniteB;
  pres.n = n;
  pres.k = k;
  pres.generators = GeneratorKind::Tau;
  pres.grading = tau_grading(n + k);
  const auto& g = pres.grading;
  for (int p = n - k + 1; p <= n; ++p) pres.add("R" + std::to_string(p), jacobi_determinant(p, g, k));
  for (int p = n + 1; p <= n + k; ++p) {
    ZPoly r(g);
    for (int q = k + 1; q <= p; ++q) {
      ZPoly t = generator_or_constant(g, q) * jacobi_determinant(p - q, g, k);
      if (q % 2) t = -t;
      r += t;
    }
    pres.add("R" + std::to_string(p), std::move(r));
  }
  for (int s = k + 1; s <= n; ++s) pres.add("S" + std::to_string(s), quadratic_relation_b(s, k, g));
  return pres;
}

inline RingPresentation stable_presentation(LieType type, int k, int degree_cap) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (degree_cap < 0 || degree_cap % 2) throw DomainError("degree cap must be a non-negative even integer");
  RingPresentation pres;
  pres.family = type == LieType::C ? Family::StableC : Family::StableB;
  pres.k = k;
  pres.degree_cap = degree_cap;
  pres.generators = type == LieType::C ? GeneratorKind::C : GeneratorKind::Tau;
  pres.grading = type == LieType::C ? c_grading(degree_cap / 2) : tau_grading(degree_cap / 2);
  for (int s = k + 1; 4 * s <= degree_cap; ++s) {
    pres.add("S" + std::to_string(s),
             type == LieType::C ? quadratic_relation_c(s, pres.grading) : quadratic_relation_b(s, k, pres.grading));
  }
  pres.no_relations_below_cap = pres.relations.empty();
  return pres;
}

inline RingPresentation make_presentation(Family f, int n, int k, int degree_cap = 16) {
  switch (f) {
    case Family::FiniteC: return finite_c_presentation(n, k);
    case Family::FiniteB: return finite_b_presentation(n, k);
    case Family::StableC: return stable_presentation(LieType::C, k, degree_cap);
    case Family::StableB: return stable_presentation(LieType::B, k, degree_cap);
  }
  throw DomainError("unknown family");
}

inline std::vector<ZPoly> relations_finite_C(int n, int k) { return finite_c_presentation(n, k).relations; }
inline std::vector<ZPoly> relations_finite_B(int n, int k) { return finite_b_presentation(n, k).relations; }
inline std::vector<ZPoly> relations_stable(LieType type, int k, int degree_cap) {
  return stable_presentation(type, k, degree_cap).relations;
}

/// tau_i -> c_i for i <= k and tau_i -> c_i / 2 for i > k (c_i = tau_i or 2 tau_i).
template <class C>
QPoly tau_to_c(int k, const Polynomial<C>& p) {
  const auto& tg = *p.grading();
  auto cg = c_grading(static_cast<int>(tg.size()));
  std::vector<std::optional<QPoly>> images;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    QPoly x = QPoly::variable(cg, i);
    if (static_cast<int>(i) + 1 > k) x *= mpq_class(1, 2);
    images.emplace_back(std::move(x));
  }
  return substitute<QPoly>(p, images, cg);
}

/// Inverse of tau_to_c: c_i -> tau_i for i <= k, c_i -> 2 tau_i for i > k.
template <class C>
QPoly c_to_tau(int k, const Polynomial<C>& p) {
  const auto& cg = *p.grading();
  auto tg = tau_grading(static_cast<int>(cg.size()));
  std::vector<std::optional<QPoly>> images;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    QPoly x = QPoly::variable(tg, i);
    if (static_cast<int>(i) + 1 > k) x *= mpq_class(2);
    images.emplace_back(std::move(x));
  }
  return substitute<QPoly>(p, images, tg);
}

/// The subring of H*(OG_k) generated by c_i = c_i(Q_B), presented over the
/// c-generators by the rewritten relations tau_to_c(4 * Sbar^s).
inline RingPresentation stable_b_c_subring_presentation(int k, int degree_cap) {
  RingPresentation tau = stable_presentation(LieType::B, k, degree_cap);
  RingPresentation pres;
  pres.family = Family::StableB;
  pres.k = k;
  pres.degree_cap = degree_cap;
  pres.generators = GeneratorKind::C;
  pres.grading = c_grading(degree_cap / 2);
  for (std::size_t i = 0; i < tau.relations.size(); ++i) {
    QPoly r = tau_to_c(k, tau.relations[i]) * mpq_class(4);
    pres.add("Shat" + tau.relation_names[i].substr(1), change_coefficients<mpz_class>(regrade(r, pres.grading)));
  }
  pres.no_relations_below_cap = pres.relations.empty();
  return pres;
}

template <class F>
class GradedQuotient;

/// Element of a truncated quotient: per-degree coordinates over the quotient
/// basis. Holds a non-owning pointer to its quotient, which must outlive it.
template <class F>
class QuotientElement {
 public:
  QuotientElement() = default;
  QuotientElement(const GradedQuotient<F>* parent, std::map<int, std::vector<F>> coords)
      : parent_(parent), coords_(std::move(coords)) {}

  const GradedQuotient<F>& parent() const { return *parent_; }
  const std::map<int, std::vector<F>>& components() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  std::vector<F> coordinates(int d) const {
    auto it = coords_.find(d);
    if (it != coords_.end()) return it->second;
    return std::vector<F>(parent_->rank(d), F(0));
  }

  /// Sum of coordinate * basis monomial.
  Polynomial<F> to_polynomial() const {
    Polynomial<F> p(parent_->grading());
    for (const auto& [d, v] : coords_) {
      const auto& basis = parent_->basis(d);
      for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
    }
    return p;
  }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.parent_ == b.parent_ && a.coords_ == b.coords_;
  }
  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    return a.parent_->normal_form(a.to_polynomial() + b.to_polynomial());
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    return a.parent_->normal_form(a.to_polynomial() * b.to_polynomial());
  }

 private:
  const GradedQuotient<F>* parent_ = nullptr;
  std::map<int, std::vector<F>> coords_;
};

struct TorsionEntry {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion_factors;
};

/// Degreewise truncation of Z[generators]/(relations) (F = mpq_class: normal
/// forms over Q, Smith diagnostics over Z) or of its reduction mod 2
/// (F = Gf2).
template <class F>
class GradedQuotient {
 public:
  using Ring = std::conditional_t<std::is_same_v<F, Gf2>, Gf2, mpz_class>;
  static_assert(std::is_same_v<F, mpq_class> || std::is_same_v<F, Gf2>, "quotients are over Q or Z/(2)");

  struct DegreeData {
    int degree = 0;
    std::vector<Monomial> monomials;  // descending monomial order
    std::map<std::vector<int>, std::uint32_t> index;
    SparseEchelon<Ring> ideal;
    std::vector<std::uint32_t> basis_columns;  // non-pivot columns, ascending
    std::vector<Monomial> basis;
    std::vector<mpz_class> smith_diagonal;  // nonzero invariant factors of I_d (Z only)
  };

  GradedQuotient(RingPresentation pres, int degree_cap) : pres_(std::move(pres)), cap_(degree_cap) {
    if (cap_ < 0 || cap_ % 2) throw DomainError("degree cap must be a non-negative even integer");
    if (is_stable(pres_.family) && cap_ > pres_.degree_cap) {
      throw DomainError("quotient cap " + std::to_string(cap_) + " exceeds the presentation's truncation " +
                        std::to_string(pres_.degree_cap));
    }
    for (const auto& r : pres_.relations) relations_.push_back(change_coefficients<Ring>(r));
    for (int d = 0; d <= cap_; ++d) degrees_.push_back(build_degree(d));
  }

  const RingPresentation& presentation() const { return pres_; }
  const GradingPtr& grading() const { return pres_.grading; }
  int degree_cap() const { return cap_; }

  const DegreeData& degree(int d) const {
    if (d < 0 || d > cap_) throw CapExceededError("degree " + std::to_string(d) + " outside [0, " + std::to_string(cap_) + "]");
    return degrees_[static_cast<std::size_t>(d)];
  }
  std::size_t rank(int d) const { return degree(d).basis.size(); }
  const std::vector<Monomial>& basis(int d) const { return degree(d).basis; }
  std::size_t free_dimension(int d) const { return degree(d).monomials.size(); }
  std::size_t ideal_rank(int d) const { return degree(d).ideal.rank(); }

  /// Degree -> rank for every even degree up to the cap.
  std::map<int, std::size_t> ranks() const {
    std::map<int, std::size_t> out;
    for (int d = 0; d <= cap_; d += 2) out[d] = rank(d);
    return out;
  }

  template <class C>
  QuotientElement<F> normal_form(const Polynomial<C>& p) const {
    if (!same_grading(p.grading(), pres_.grading)) throw StructuralError("normal_form: polynomial over a different grading");
    std::map<int, std::vector<F>> coords;
    for (int d : p.degrees()) {
      if (d > cap_) throw CapExceededError("degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap_));
      const DegreeData& dd = degree(d);
      std::vector<F> v(dd.monomials.size(), F(0));
      for (const auto& [m, c] : p.terms()) {
        if (m.degree() == d) v[dd.index.at(m.exps())] = coeff_cast<F>(c);
      }
      dd.ideal.reduce(v);
      std::vector<F> out;
      out.reserve(dd.basis_columns.size());
      bool nonzero = false;
      for (auto col : dd.basis_columns) {
        out.push_back(v[col]);
        if (!is_zero(v[col])) nonzero = true;
      }
      if (nonzero) coords.emplace(d, std::move(out));
    }
    return QuotientElement<F>(this, std::move(coords));
  }

  QuotientElement<F> zero() const { return QuotientElement<F>(this, {}); }
  QuotientElement<F> one() const { return normal_form(Polynomial<F>::constant(pres_.grading, F(1))); }

  /// Degree -> {free rank, invariant factors > 1} of Z^{N_d} / I_d.
  std::map<int, TorsionEntry> torsion_report() const
    requires std::is_same_v<F, mpq_class>
  {
    std::map<int, TorsionEntry> out;
    for (int d = 0; d <= cap_; d += 2) {
      TorsionEntry e;
      e.free_rank = rank(d);
      for (const auto& x : degree(d).smith_diagonal)
        if (x > 1) e.torsion_factors.push_back(x);
      out[d] = std::move(e);
    }
    return out;
  }

 private:
  DegreeData build_degree(int d) const {
    DegreeData dd;
    dd.degree = d;
    dd.monomials = monomials_of_degree(*pres_.grading, d);
    for (std::uint32_t i = 0; i < dd.monomials.size(); ++i) dd.index.emplace(dd.monomials[i].exps(), i);
    dd.ideal = SparseEchelon<Ring>(dd.monomials.size());
    for (const auto& r : relations_) {
      if (r.is_zero() || dd.ideal.full()) continue;
      const int rd = r.degree();
      if (rd > d) continue;
      for (const auto& m : monomials_of_degree(*pres_.grading, d - rd)) {
        typename SparseEchelon<Ring>::Row row;
        row.reserve(r.size());
        for (const auto& [rm, c] : r.terms()) row.emplace_back(dd.index.at((m * rm).exps()), c);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        dd.ideal.insert(std::move(row));
        if (dd.ideal.full()) break;
      }
    }
    for (std::uint32_t c = 0; c < dd.monomials.size(); ++c) {
      if (!dd.ideal.rows().count(c)) {
        dd.basis_columns.push_back(c);
        dd.basis.push_back(dd.monomials[c]);
      }
    }
    if constexpr (std::is_same_v<F, mpq_class>) dd.smith_diagonal = invariant_factors(dd);
    return dd;
  }

  // A triangular basis with unit pivots spans a saturated lattice, whose
  // invariant factors are all 1; otherwise run the full Smith form.
  static std::vector<mpz_class> invariant_factors(const DegreeData& dd) {
    const auto& rows = dd.ideal.rows();
    bool unit = true;
    for (const auto& [p, row] : rows)
      if (row.back().second != 1) unit = false;
    if (unit) return std::vector<mpz_class>(rows.size(), mpz_class(1));
    IntMatrix m(rows.size(), dd.monomials.size());
    std::size_t i = 0;
    for (const auto& [p, row] : rows) {
      for (const auto& [c, x] : row) m(i, c) = x;
      ++i;
    }
    SmithForm snf = smith_normal_form(m);
    std::vector<mpz_class> out;
    for (const auto& x : snf.diagonal)
      if (sgn(x) != 0) out.push_back(x);
    return out;
  }

  RingPresentation pres_;
  int cap_;
  std::vector<Polynomial<Ring>> relations_;
  std::vector<DegreeData> degrees_;
};

using QQuotient = GradedQuotient<mpq_class>;
using F2Quotient = GradedQuotient<Gf2>;

inline QQuotient build_quotient(RingPresentation pres, int degree_cap) { return QQuotient(std::move(pres), degree_cap); }

/// Same presentation with coefficients reduced mod 2. Only stable families;
/// for type B the reduction is taken on the c-generated subring.
inline F2Quotient mod2_quotient(const QQuotient& q) {
  const auto& pres = q.presentation();
  if (!is_stable(pres.family)) throw DomainError("mod2_quotient requires a stable presentation");
  if (pres.family == Family::StableB && pres.generators == GeneratorKind::Tau) {
    return F2Quotient(stable_b_c_subring_presentation(pres.k, pres.degree_cap), q.degree_cap());
  }
  return F2Quotient(pres, q.degree_cap());
}

/// Exponent vectors of c_1^{a_1}...c_k^{a_k} * prod_{j>k} c_j^{e_j}, e_j in {0,1}.
inline bool is_mod2_tensor_monomial(const Monomial& m, int k) {
  for (std::size_t j = static_cast<std::size_t>(k); j < m.exps().size(); ++j)
    if (m.exp(j) > 1) return false;
  return true;
}

/// The mod-2 quotient basis in every degree is exactly the set of monomials
/// described by is_mod2_tensor_monomial.
inline bool mod2_basis_matches_tensor_form(const F2Quotient& q) {
  const int k = q.presentation().k;
  for (int d = 0; d <= q.degree_cap(); d += 2) {
    std::vector<Monomial> expected;
    for (const auto& m : monomials_of_degree(*q.grading(), d))
      if (is_mod2_tensor_monomial(m, k)) expected.push_back(m);
    if (expected != q.basis(d)) return false;
  }
  return true;
}

}  // namespace isogr
