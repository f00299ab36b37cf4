#pragma once

// The Cayley-transform Springer morphism for Sp(2n) and SO(2n+1), its torus
// restriction, and the test for characters that are symmetric polynomials in
// the squared Cayley coordinates ((t_i - t_i^{-1}) / 2)^2.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isogr/linalg.hpp"
#include "isogr/partitions.hpp"
#include "isogr/polynomial.hpp"

namespace isogr {

enum class GroupFamily { SpC, SoB };

struct GroupSpec {
  GroupFamily family = GroupFamily::SpC;
  int n = 1;

  GroupSpec() = default;
  GroupSpec(GroupFamily f, int rank) : family(f), n(rank) {
    if (n < 1) throw DomainError("group rank must be at least 1");
  }
  /// Size of the defining representation.
  std::size_t dim() const { return family == GroupFamily::SpC ? 2 * n : 2 * n + 1; }
  std::string name() const {
    return family == GroupFamily::SpC ? "Sp(" + std::to_string(2 * n) + ")" : "SO(" + std::to_string(2 * n + 1) + ")";
  }
};

/// Gram matrix of the invariant form: [[0, J], [-J, 0]] for Sp, the
/// antidiagonal of ones with 2 in the middle for SO.
inline RatMatrix form_matrix(const GroupSpec& g) {
  const std::size_t N = g.dim();
  RatMatrix e(N, N);
  if (g.family == GroupFamily::SpC) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    for (std::size_t i = 0; i < n; ++i) {
      e(i, N - 1 - i) = 1;
      e(n + i, n - 1 - i) = -1;
    }
  } else {
    for (std::size_t i = 0; i < N; ++i) e(i, N - 1 - i) = 1;
    e(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.n)) = 2;
  }
  return e;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw StructuralError("inverse of a non-square matrix");
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    mpq_class s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      mpq_class f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline mpq_class determinant(RatMatrix a) {
  const std::size_t n = a.rows();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(c, p);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      mpq_class f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// g^t E g = E and det g = 1.
inline bool preserves_form(const GroupSpec& g, const RatMatrix& m) {
  if (m.rows() != g.dim() || m.cols() != g.dim()) return false;
  const RatMatrix e = form_matrix(g);
  return m.transpose() * e * m == e && determinant(m) == 1;
}

/// X^t E + E X = 0.
inline bool in_lie_algebra(const GroupSpec& g, const RatMatrix& x) {
  const RatMatrix e = form_matrix(g);
  return (x.transpose() * e + e * x).is_zero_matrix();
}

class GroupMatrix {
 public:
  GroupMatrix(GroupSpec g, RatMatrix m) : group_(g), m_(std::move(m)) {
    if (!preserves_form(group_, m_)) throw DomainError("matrix is not an element of " + group_.name());
  }
  const GroupSpec& group() const { return group_; }
  const RatMatrix& matrix() const { return m_; }

  friend GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b) {
    return GroupMatrix(a.group_, a.m_ * b.m_);
  }

 private:
  GroupSpec group_;
  RatMatrix m_;
};

struct TorusElement {
  GroupSpec group;
  std::vector<mpq_class> t;

  TorusElement(GroupSpec g, std::vector<mpq_class> entries) : group(g), t(std::move(entries)) {
    if (static_cast<int>(t.size()) != group.n) throw StructuralError("torus element needs exactly n entries");
    for (const auto& x : t)
      if (sgn(x) == 0) throw DomainError("torus entries must be nonzero");
  }

  /// diag(t_1..t_n, t_n^{-1}..t_1^{-1}), with a middle 1 for SO.
  GroupMatrix matrix() const {
    const std::size_t N = group.dim(), n = t.size();
    RatMatrix m(N, N);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = t[i];
      m(N - 1 - i, N - 1 - i) = 1 / t[i];
    }
    if (group.family == GroupFamily::SoB) m(n, n) = 1;
    return GroupMatrix(group, std::move(m));
  }
};

struct CartanElement {
  GroupSpec group;
  std::vector<mpq_class> x;

  /// diag(x_1..x_n, -x_n..-x_1), with a middle 0 for SO.
  RatMatrix matrix() const {
    const std::size_t N = group.dim(), n = x.size();
    RatMatrix m(N, N);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = x[i];
      m(N - 1 - i, N - 1 - i) = -x[i];
    }
    return m;
  }
};

/// (g - E^{-1} g^t E) / 2.
inline RatMatrix theta_matrix(const GroupMatrix& g) {
  const RatMatrix e = form_matrix(g.group());
  const RatMatrix e_inv = *inverse(e);
  RatMatrix out = g.matrix() - e_inv * g.matrix().transpose() * e;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) /= 2;
  return out;
}

/// x_i = (t_i - t_i^{-1}) / 2.
inline CartanElement theta_torus(const TorusElement& t) {
  CartanElement out{t.group, {}};
  for (const auto& ti : t.t) out.x.push_back((ti - 1 / ti) / 2);
  return out;
}

/// exp(a X) for the nilpotent X = E_ij - E^{-1} E_ji E in the Lie algebra
/// (i != j, both strictly on one side of the diagonal). The exponential series
/// terminates, so the result lies exactly in the group.
inline GroupMatrix root_element(const GroupSpec& g, std::size_t i, std::size_t j, const mpq_class& a) {
  const std::size_t N = g.dim();
  if (i >= N || j >= N || i == j) throw DomainError("root_element needs distinct indices inside the matrix");
  const RatMatrix e = form_matrix(g);
  const RatMatrix e_inv = *inverse(e);
  RatMatrix eij(N, N), eji(N, N);
  eij(i, j) = 1;
  eji(j, i) = 1;
  RatMatrix x = eij - e_inv * eji * e;
  RatMatrix term = RatMatrix::identity(N);
  RatMatrix sum = RatMatrix::identity(N);
  for (int m = 1; m <= static_cast<int>(N); ++m) {
    term = term * x;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) term(r, c) *= a / m;
    if (term.is_zero_matrix()) break;
    sum = sum + term;
  }
  return GroupMatrix(g, std::move(sum));
}

// ---------------------------------------------------------------------------
// Characters on the torus

inline GradingPtr torus_grading(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return make_grading(std::move(names), std::vector<int>(static_cast<std::size_t>(n), 1));
}

inline GradingPtr cayley_square_grading(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_grading(std::move(names), std::vector<int>(static_cast<std::size_t>(n), 1));
}

struct LaurentCharacter {
  int n = 0;
  LaurentPolynomial f;
};

/// Applies the signed permutation t_i -> t_{perm[i]}^{sign[i]} to f.
inline LaurentPolynomial act(const LaurentPolynomial& f, const std::vector<std::size_t>& perm,
                             const std::vector<int>& signs) {
  LaurentPolynomial out(f.grading());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(m.exps().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = signs[i] * m.exp(i);
    out.add_term(Monomial(*f.grading(), std::move(e)), c);
  }
  return out;
}

/// Invariance under adjacent transpositions and t_1 -> t_1^{-1}, which
/// generate the hyperoctahedral group.
inline bool is_weyl_invariant(const LaurentCharacter& ch) {
  const std::size_t n = static_cast<std::size_t>(ch.n);
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<int> plus(n, 1);
  if (n == 0) return true;
  auto flip = plus;
  flip[0] = -1;
  if (act(ch.f, id, flip) != ch.f) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto p = id;
    std::swap(p[i], p[i + 1]);
    if (act(ch.f, p, plus) != ch.f) return false;
  }
  return true;
}

template <class C>
bool is_symmetric(const Polynomial<C>& p) {
  const std::size_t n = p.grading()->size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Polynomial<C> q(p.grading());
    for (const auto& [m, c] : p.terms()) {
      auto e = m.exps();
      std::swap(e[i], e[i + 1]);
      q.add_term(Monomial(*p.grading(), std::move(e)), c);
    }
    if (q != p) return false;
  }
  return true;
}

/// ((t_i - t_i^{-1}) / 2)^2 = (t_i^2 - 2 + t_i^{-2}) / 4.
inline LaurentPolynomial cayley_square(const GradingPtr& tg, std::size_t i) {
  LaurentPolynomial out(tg);
  std::vector<int> e(tg->size(), 0);
  e[i] = 2;
  out.add_term(Monomial(*tg, e), mpq_class(1, 4));
  e[i] = -2;
  out.add_term(Monomial(*tg, e), mpq_class(1, 4));
  out.add_term(Monomial::one(*tg), mpq_class(-1, 2));
  return out;
}

/// f(t) = P((t_1bar)^2, ..., (t_nbar)^2) for symmetric P in x_1..x_n.
inline LaurentCharacter char_from_symmetric(const QPoly& p) {
  if (!is_symmetric(p)) throw DomainError("char_from_symmetric: polynomial is not symmetric");
  const int n = static_cast<int>(p.grading()->size());
  auto tg = torus_grading(n);
  std::vector<std::optional<LaurentPolynomial>> images;
  for (int i = 0; i < n; ++i) images.emplace_back(cayley_square(tg, static_cast<std::size_t>(i)));
  return {n, substitute<LaurentPolynomial>(p, images, tg)};
}

/// Monomial symmetric polynomial m_lambda(x_1..x_n).
inline QPoly monomial_symmetric(const GradingPtr& xg, const std::vector<int>& lambda) {
  const std::size_t n = xg->size();
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) e[i] = lambda[i];
  std::sort(e.begin(), e.end());
  QPoly out(xg);
  do {
    out.add_term(Monomial(*xg, e), mpq_class(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

/// Returns P_f with char_from_symmetric(P_f) = f, or nullopt when f is not of
/// that form. Throws InvarianceError for a character that is not Weyl
/// invariant.
///
/// Degree bound: x_i contributes t_i^{+-2} at most, and distinct monomials
/// x^a have distinct extreme terms prod t_i^{2 a_i}, so a polynomial P of
/// degree m gives a character whose largest sum of |exponents| is exactly 2m.
/// Hence deg P_f = (max sum |exponent| of f) / 2 and only m_lambda with
/// |lambda| <= that bound are needed.
inline std::optional<QPoly> is_omega1_polynomial(const LaurentCharacter& ch) {
  if (static_cast<int>(ch.f.grading()->size()) != ch.n) throw StructuralError("character variable count differs from n");
  if (!is_weyl_invariant(ch)) throw InvarianceError("character is not invariant under signed permutations");
  auto xg = cayley_square_grading(ch.n);
  if (ch.f.is_zero()) return QPoly(xg);
  int top = 0;
  for (const auto& [m, c] : ch.f.terms()) {
    int s = 0;
    for (int e : m.exps()) s += std::abs(e);
    top = std::max(top, s);
  }
  const int bound = top / 2;

  std::vector<QPoly> candidates;
  for (int size = 0; size <= bound; ++size) {
    for (auto& lam : partitions_of(size)) {
      if (static_cast<int>(lam.size()) <= ch.n) candidates.push_back(monomial_symmetric(xg, lam));
    }
  }
  // Columns: candidates plus f; rows: Laurent monomials.
  std::vector<LaurentPolynomial> images;
  for (const auto& c : candidates) images.push_back(char_from_symmetric(c).f);
  std::map<std::vector<int>, std::uint32_t> row_index;
  auto row_of = [&](const Monomial& m) {
    auto [it, inserted] = row_index.try_emplace(m.exps(), static_cast<std::uint32_t>(row_index.size()));
    return it->second;
  };
  for (const auto& im : images)
    for (const auto& [m, c] : im.terms()) row_of(m);
  for (const auto& [m, c] : ch.f.terms()) row_of(m);

  // Gaussian elimination on the augmented system [A | f] over Q.
  const std::size_t rows = row_index.size(), cols = candidates.size();
  RatMatrix a(rows, cols + 1);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [m, c] : images[j].terms()) a(row_index.at(m.exps()), j) = c;
  for (const auto& [m, c] : ch.f.terms()) a(row_index.at(m.exps()), cols) = c;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c <= cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (c == cols) return std::nullopt;  // inconsistent system
    a.swap_rows(r, p);
    mpq_class s = 1 / a(r, c);
    for (std::size_t j = c; j <= cols; ++j) a(r, j) *= s;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      mpq_class f = a(i, c);
      for (std::size_t j = c; j <= cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  QPoly out(xg);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    QPoly term = candidates[pivot_col[i]];
    term *= a(i, cols);
    out += term;
  }
  return out;
}

}  // namespace isogr
