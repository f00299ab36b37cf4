#pragma once

// The homomorphisms xi from the polynomial characters of Sp(2k) / SO(2k+1)
// (free on e_1..e_k, deg e_i = 4i) into the finite and stable cohomology
// rings, sending
//
//   e_i -> c_i^2 + 2 sum_{j=1}^i (-1)^j c_{i+j} c_{i-j}    (c_0 = 1).
//
// In type B the c_i are the Chern classes of Q_B, i.e. c_i = tau_i for
// i <= k and 2 tau_i above k. Kernels are computed over Z per degree; the
// mod-2 route (e_i -> c_i^2) is checked alongside.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isogr/linalg.hpp"
#include "isogr/presentations.hpp"

namespace isogr {

inline GradingPtr e_grading(int k) { return indexed_grading("e", k, 4); }

/// c_i^2 + 2 sum_{j=1}^i (-1)^j c_{i+j} c_{i-j}, where chern(r) supplies c_r
/// (including c_0 = 1 and zero outside the generator range).
inline ZPoly xi_formula(int i, const std::function<ZPoly(int)>& chern) {
  ZPoly out = chern(i).pow(2);
  for (int j = 1; j <= i; ++j) {
    ZPoly t = chern(i + j) * chern(i - j);
    t *= mpz_class(j % 2 ? -2 : 2);
    out += t;
  }
  return out;
}

/// c_r expressed in the generators of a presentation: c_r itself, or
/// delta_r * tau_r when the generators are the tau classes.
inline std::function<ZPoly(int)> chern_classes(const RingPresentation& pres) {
  const GradingPtr g = pres.grading;
  if (pres.generators == GeneratorKind::C) {
    return [g](int r) { return generator_or_constant(g, r); };
  }
  const int k = pres.k;
  return [g, k](int r) {
    ZPoly x = generator_or_constant(g, r);
    if (r > 0) x *= mpz_class(delta(r, k));
    return x;
  };
}

struct RepPolyDomain {
  LieType type = LieType::C;
  int k = 1;
  GradingPtr grading;

  RepPolyDomain(LieType t, int rank) : type(t), k(rank), grading(e_grading(rank)) {
    if (k < 1) throw DomainError("the Levi rank k must be at least 1");
  }
};

class XiMap {
 public:
  /// The codomain must stay alive for as long as the map is used.
  XiMap(LieType type, int k, const QQuotient& codomain) : domain_(type, k), codomain_(&codomain) {
    const auto& pres = codomain.presentation();
    if (lie_type(pres.family) != type) throw DomainError("xi: codomain has the wrong Lie type");
    if (pres.k != k) throw DomainError("xi: codomain k differs from the domain rank");
    auto chern = chern_classes(pres);
    for (int i = 1; i <= k; ++i) images_.push_back(xi_formula(i, chern));
  }

  const RepPolyDomain& domain() const { return domain_; }
  const QQuotient& codomain() const { return *codomain_; }
  int k() const { return domain_.k; }

  /// image(e_i) as a polynomial in the codomain generators.
  const ZPoly& image_polynomial(int i) const {
    if (i < 1 || i > domain_.k) throw DomainError("xi: generator index " + std::to_string(i) + " outside 1..k");
    return images_[static_cast<std::size_t>(i - 1)];
  }

  QuotientElement<mpq_class> generator_image(int i) const {
    const ZPoly& p = image_polynomial(i);
    if (4 * i > codomain_->degree_cap()) {
      throw CapExceededError("e_" + std::to_string(i) + " has degree " + std::to_string(4 * i) + " above the cap " +
                             std::to_string(codomain_->degree_cap()));
    }
    return codomain_->normal_form(p);
  }

  /// P(e_1..e_k) pushed through the generator images, before reduction.
  template <class C>
  Polynomial<C> lift(const Polynomial<C>& p) const {
    if (!same_grading(p.grading(), domain_.grading)) throw StructuralError("xi: polynomial is not over e_1..e_k");
    std::vector<std::optional<Polynomial<C>>> imgs;
    for (const auto& im : images_) imgs.emplace_back(change_coefficients<C>(im));
    return substitute<Polynomial<C>>(p, imgs, codomain_->grading());
  }

  template <class C>
  QuotientElement<mpq_class> evaluate(const Polynomial<C>& p) const {
    for (int d : p.degrees())
      if (d > codomain_->degree_cap())
        throw CapExceededError("xi: input degree " + std::to_string(d) + " above the cap " +
                               std::to_string(codomain_->degree_cap()));
    return codomain_->normal_form(lift(p));
  }

 private:
  RepPolyDomain domain_;
  const QQuotient* codomain_;
  std::vector<ZPoly> images_;
};

template <class C>
QuotientElement<mpq_class> xi_evaluate(const Polynomial<C>& p, const XiMap& map) {
  return map.evaluate(p);
}

/// e^a -> prod_i c_i^{2 a_i}: the reduction of xi mod 2.
inline Monomial mod2_xi_monomial(const std::vector<int>& a, const GradingSpec& c_grading) {
  if (a.size() > c_grading.size()) throw DomainError("mod2_xi_monomial: more e-variables than c-generators");
  std::vector<int> e(c_grading.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw DomainError("mod2_xi_monomial: negative exponent");
    e[i] = 2 * a[i];
  }
  return Monomial(c_grading, std::move(e));
}

struct KernelDegree {
  int degree = 0;
  std::size_t domain_dim = 0;
  std::size_t codomain_rank = 0;
  std::size_t image_rank_q = 0;
  std::optional<std::size_t> image_rank_mod2;
  std::vector<std::vector<mpz_class>> kernel_basis;  // over the e-monomial basis of this degree
  std::optional<bool> mod2_matches_monomial_route;
  std::optional<bool> images_integral;  // c-coordinates integral (type B c-subring)
};

struct KernelReport {
  LieType type = LieType::C;
  int k = 0;
  int degree_cap = 0;
  std::string codomain;
  std::vector<KernelDegree> degrees;

  /// Injective in every scanned degree; says nothing above the cap.
  bool injective() const {
    for (const auto& d : degrees)
      if (!d.kernel_basis.empty()) return false;
    return true;
  }
  bool mod2_route_ok() const {
    for (const auto& d : degrees) {
      if (d.mod2_matches_monomial_route && !*d.mod2_matches_monomial_route) return false;
      if (d.image_rank_mod2 && *d.image_rank_mod2 != d.domain_dim) return false;
    }
    return true;
  }
  bool integral() const {
    for (const auto& d : degrees)
      if (d.images_integral && !*d.images_integral) return false;
    return true;
  }
};

namespace detail {

/// Columns are the coordinates of the images, each row scaled to clear
/// denominators (which leaves the kernel unchanged).
inline IntMatrix integer_image_matrix(const std::vector<std::vector<mpq_class>>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (const auto& col : columns) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), col[r].get_den_mpz_t());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      mpq_class x = columns[c][r] * l;
      m(r, c) = x.get_num();
    }
  }
  return m;
}

inline bool all_integral(const std::vector<std::vector<mpq_class>>& columns) {
  for (const auto& col : columns)
    for (const auto& x : col)
      if (x.get_den() != 1) return false;
  return true;
}

}  // namespace detail

/// Degreewise kernel of xi into an arbitrary codomain (finite or stable).
/// integral_route, when given, is an XiMap into a c-generated presentation
/// whose coordinates must be integers; mod2, when given, is the mod-2
/// quotient of that c-generated ring.
inline KernelReport scan_kernel(const XiMap& map, int degree_cap, const XiMap* integral_route = nullptr,
                                const F2Quotient* mod2 = nullptr) {
  const QQuotient& q = map.codomain();
  if (degree_cap > q.degree_cap()) throw CapExceededError("scan cap above the codomain cap");
  KernelReport rep;
  rep.type = map.domain().type;
  rep.k = map.k();
  rep.degree_cap = degree_cap;
  rep.codomain = q.presentation().describe();
  const GradingPtr eg = map.domain().grading;
  for (int d = 0; d <= degree_cap; d += 2) {
    KernelDegree kd;
    kd.degree = d;
    const auto monos = monomials_of_degree(*eg, d);
    kd.domain_dim = monos.size();
    kd.codomain_rank = q.rank(d);
    std::vector<std::vector<mpq_class>> cols;
    std::vector<ZPoly> lifted;
    for (const auto& m : monos) {
      ZPoly p = ZPoly::monomial(eg, m.exps());
      cols.push_back(map.evaluate(p).coordinates(d));
      if (integral_route) lifted.push_back(integral_route->lift(p));
    }
    const IntMatrix im = detail::integer_image_matrix(cols, kd.codomain_rank);
    kd.image_rank_q = monos.empty() ? 0 : rank_over_rationals(im);
    kd.kernel_basis = monos.empty() ? std::vector<std::vector<mpz_class>>{} : integer_kernel(im);

    if (integral_route) {
      std::vector<std::vector<mpq_class>> ccols;
      for (const auto& p : lifted) ccols.push_back(integral_route->codomain().normal_form(p).coordinates(d));
      kd.images_integral = detail::all_integral(ccols);
    } else if (detail::all_integral(cols)) {
      kd.images_integral = true;
    }

    if (mod2) {
      const std::size_t rows2 = mod2->rank(d);
      IntMatrix a(rows2, monos.size()), b(rows2, monos.size());
      for (std::size_t c = 0; c < monos.size(); ++c) {
        const ZPoly& img = integral_route ? lifted[c] : map.lift(ZPoly::monomial(eg, monos[c].exps()));
        auto va = mod2->normal_form(change_coefficients<Gf2>(img)).coordinates(d);
        auto vb = mod2->normal_form(F2Poly::monomial(mod2->grading(), mod2_xi_monomial(monos[c].exps(), *mod2->grading()).exps()))
                      .coordinates(d);
        for (std::size_t r = 0; r < rows2; ++r) {
          a(r, c) = va[r].value();
          b(r, c) = vb[r].value();
        }
      }
      kd.mod2_matches_monomial_route = (a == b);
      kd.image_rank_mod2 = rank_mod2(a);
    } else if (detail::all_integral(cols)) {
      kd.image_rank_mod2 = rank_mod2(im);
    }
    rep.degrees.push_back(std::move(kd));
  }
  return rep;
}

/// Per-degree kernel of the stable xi_k (type C) or xi-bar_k (type B) up to
/// degree_cap. Type B runs in the tau presentation of H*(OG_k), with the
/// integrality and mod-2 checks done in the c-generated subring.
inline KernelReport injectivity_scan(int k, LieType type, int degree_cap) {
  if (degree_cap < 4 || degree_cap % 2) throw DomainError("injectivity scan needs an even cap of at least 4");
  const QQuotient q = build_quotient(stable_presentation(type, k, degree_cap), degree_cap);
  const XiMap map(type, k, q);
  if (type == LieType::C) {
    const F2Quotient q2 = mod2_quotient(q);
    return scan_kernel(map, degree_cap, &map, &q2);
  }
  const QQuotient sub = build_quotient(stable_b_c_subring_presentation(k, degree_cap), degree_cap);
  const XiMap submap(LieType::B, k, sub);
  const F2Quotient q2 = mod2_quotient(q);
  return scan_kernel(map, degree_cap, &submap, &q2);
}

/// The projection c_j -> c_j (j <= n+k), c_{n+k+1} -> 0 from the generators
/// of the (n+1)-presentation to those of the n-presentation.
inline ZPoly restrict_to_smaller(const ZPoly& p, const GradingPtr& small) {
  const std::size_t nb = p.grading()->size();
  std::vector<std::optional<ZPoly>> images;
  for (std::size_t j = 0; j < nb; ++j) {
    images.emplace_back(j < small->size() ? ZPoly::variable(small, j) : ZPoly(small));
  }
  return substitute<ZPoly>(p, images, small);
}

/// pi_n^* o xi_{n+1,k} = xi_{n,k} on e_1..e_k, compared in normal form.
inline bool diagram_check(int n, int k, LieType type) {
  if (k < 1 || k > n) throw DomainError("diagram_check needs 1 <= k <= n");
  const Family f = type == LieType::C ? Family::FiniteC : Family::FiniteB;
  const RingPresentation big = make_presentation(f, n + 1, k);
  const QQuotient small(make_presentation(f, n, k), 4 * k);
  const XiMap xi_small(type, k, small);
  const auto chern_big = chern_classes(big);
  for (int i = 1; i <= k; ++i) {
    const ZPoly pulled = restrict_to_smaller(xi_formula(i, chern_big), small.grading());
    if (small.normal_form(pulled) != xi_small.generator_image(i)) return false;
  }
  return true;
}

/// Every relation of the (n+1)-presentation maps into the ideal of the
/// n-presentation under restrict_to_smaller.
inline bool transition_preserves_relations(int n, int k, Family f) {
  if (is_stable(f)) throw DomainError("transition check applies to finite families");
  const RingPresentation big = make_presentation(f, n + 1, k);
  int cap = 0;
  for (const auto& r : big.relations) cap = std::max(cap, r.degree());
  const QQuotient small(make_presentation(f, n, k), cap);
  for (const auto& r : big.relations) {
    if (!small.normal_form(restrict_to_smaller(r, small.grading())).is_zero()) return false;
  }
  return true;
}

struct SurjectivityWitness {
  int degree = 2;
  std::size_t domain_dim = 0;
  std::size_t codomain_rank = 0;
  std::string witness_class;

  /// The degree-2 class cannot be hit: the domain has nothing in degree 2.
  bool certifies() const { return domain_dim == 0 && codomain_rank > 0; }
};

inline SurjectivityWitness nonsurjectivity_witness(int k, LieType type, int degree_cap = 16) {
  if (k < 1) throw DomainError("witness needs k >= 1");
  const QQuotient q = build_quotient(stable_presentation(type, k, degree_cap), std::min(degree_cap, 4));
  SurjectivityWitness w;
  w.domain_dim = monomials_of_degree(*e_grading(k), 2).size();
  w.codomain_rank = q.rank(2);
  if (w.codomain_rank > 0) w.witness_class = to_string(ZPoly::monomial(q.grading(), q.basis(2).front().exps()));
  return w;
}

}  // namespace isogr
