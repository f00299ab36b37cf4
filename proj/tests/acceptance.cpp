// Acceptance run: one PASS/FAIL line per criterion with its runtime budget.
// Exit status is nonzero if any criterion fails or overruns its budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isogr/partitions.hpp"
#include "isogr/polynomial_io.hpp"
#include "isogr/presentations.hpp"
#include "isogr/springer.hpp"
#include "isogr/xi.hpp"

using namespace isogr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string family_tag(Family f, int n, int k) {
  return to_string(f) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// Ranks are checked past the top degree by the largest generator degree, so
// every higher degree is forced to vanish as well.
int certifying_cap(int n, int k) { return 2 * grassmannian_dimension(k, n) + 2 * (n + k); }

Outcome betti_agreement() {
  Outcome out;
  int rings = 0;
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto profile = betti_profile(k, n);
      long total = 0;
      for (const auto& [d, c] : profile) total += c;
      if (total != (1L << (n - k)) * binomial(n, k)) out.fail("partition total mismatch at n=" + std::to_string(n));
      for (auto f : {Family::FiniteC, Family::FiniteB}) {
        const int cap = certifying_cap(n, k);
        const QQuotient q(make_presentation(f, n, k), cap);
        std::size_t rank_total = 0;
        for (int d = 0; d <= cap; d += 2) {
          auto it = profile.find(d);
          const std::size_t want = it == profile.end() ? 0 : static_cast<std::size_t>(it->second);
          if (q.rank(d) != want) out.fail(family_tag(f, n, k) + " degree " + std::to_string(d));
          rank_total += q.rank(d);
        }
        if (static_cast<long>(rank_total) != total) out.fail(family_tag(f, n, k) + " total rank");
        ++rings;
      }
    }
  if (out.pass) out.detail = std::to_string(rings) + " rings, ranks = k-strict partition counts";
  return out;
}

Outcome p3_model() {
  Outcome out;
  const QQuotient q(finite_c_presentation(2, 1), 8);
  const auto g = q.grading();
  const std::vector<std::size_t> want{1, 1, 1, 1, 0};
  for (int d = 0; d <= 8; d += 2)
    if (q.rank(d) != want[static_cast<std::size_t>(d / 2)]) out.fail("rank in degree " + std::to_string(d));
  if (!q.normal_form(parse_polynomial<mpz_class>("c1^4", g)).is_zero()) out.fail("c1^4 not zero");
  if (q.normal_form(parse_polynomial<mpz_class>("c1^3", g)).is_zero()) out.fail("c1^3 is zero");
  if (out.pass) out.detail = "ranks 1,1,1,1,0; c1^4 = 0; c1^3 != 0";
  return out;
}

Outcome freeness() {
  Outcome out;
  int checked = 0;
  auto check = [&](const QQuotient& q, const std::string& tag) {
    for (const auto& [d, e] : q.torsion_report())
      if (!e.torsion_factors.empty()) out.fail(tag + " torsion in degree " + std::to_string(d));
    ++checked;
  };
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto f : {Family::FiniteC, Family::FiniteB})
        check(QQuotient(make_presentation(f, n, k), certifying_cap(n, k)), family_tag(f, n, k));
  for (int k = 0; k <= 3; ++k) {
    check(QQuotient(stable_presentation(LieType::C, k, 16), 16), "StableC k=" + std::to_string(k));
    check(QQuotient(stable_b_c_subring_presentation(k, 16), 16), "StableB c-subring k=" + std::to_string(k));
  }
  if (out.pass) out.detail = std::to_string(checked) + " rings torsion-free in every degree";
  return out;
}

Outcome stability() {
  Outcome out;
  int pairs = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      for (auto f : {Family::FiniteC, Family::FiniteB}) {
        if (!transition_preserves_relations(n, k, f)) out.fail(family_tag(f, n + 1, k) + " -> n=" + std::to_string(n));
        ++pairs;
      }
  if (out.pass) out.detail = std::to_string(pairs) + " transitions map relations into the ideal";
  return out;
}

Outcome desk_scale_injectivity(LieType t) {
  Outcome out;
  std::ostringstream ranks;
  for (int k = 1; k <= 3; ++k) {
    const KernelReport rep = injectivity_scan(k, t, 16);
    const std::string tag = "k=" + std::to_string(k);
    if (!rep.injective()) out.fail(tag + " has a kernel");
    for (const auto& d : rep.degrees) {
      if (!d.mod2_matches_monomial_route || !*d.mod2_matches_monomial_route)
        out.fail(tag + " mod-2 matrix differs from e_i -> c_i^2 in degree " + std::to_string(d.degree));
      if (!d.image_rank_mod2 || *d.image_rank_mod2 != d.domain_dim)
        out.fail(tag + " mod-2 rank deficient in degree " + std::to_string(d.degree));
      if (d.image_rank_q != d.domain_dim) out.fail(tag + " rational rank deficient");
      if (t == LieType::B && (!d.images_integral || !*d.images_integral))
        out.fail(tag + " non-integral image in degree " + std::to_string(d.degree));
    }
    std::size_t dim = 0;
    for (const auto& d : rep.degrees) dim += d.domain_dim;
    ranks << (k > 1 ? ", " : "") << "k=" << k << ": " << dim << " e-monomials";
  }
  if (out.pass) out.detail = "injective up to degree 16, mod-2 full column rank (" + ranks.str() + ")";
  return out;
}

Outcome generator_images() {
  Outcome out;
  const std::vector<std::string> golden = {"c1^2 - 2*c2", "c2^2 - 2*c1*c3 + 2*c4", "c3^2 - 2*c2*c4 + 2*c1*c5 - 2*c6",
                                           "c4^2 - 2*c3*c5 + 2*c2*c6 - 2*c1*c7 + 2*c8"};
  const QQuotient qc(stable_presentation(LieType::C, 4, 16), 16);
  const QQuotient qb(stable_presentation(LieType::B, 4, 16), 16);
  const QQuotient qs(stable_b_c_subring_presentation(4, 16), 16);
  const XiMap xc(LieType::C, 4, qc), xb(LieType::B, 4, qb), xs(LieType::B, 4, qs);
  for (int i = 1; i <= 4; ++i) {
    const auto& gold = golden[static_cast<std::size_t>(i - 1)];
    const ZPoly want_c = parse_polynomial<mpz_class>(gold, qc.grading());
    if (xc.image_polynomial(i) != want_c) out.fail("type C image of e" + std::to_string(i));
    if (xc.generator_image(i) != qc.normal_form(want_c)) out.fail("type C normal form of e" + std::to_string(i));
    if (xs.image_polynomial(i) != parse_polynomial<mpz_class>(gold, qs.grading()))
      out.fail("type B (c-classes) image of e" + std::to_string(i));
    const QPoly in_tau = c_to_tau(4, change_coefficients<mpq_class>(want_c));
    if (change_coefficients<mpq_class>(xb.image_polynomial(i)) != regrade(in_tau, qb.grading()))
      out.fail("type B (tau) image of e" + std::to_string(i));
  }
  if (out.pass) out.detail = "e1..e4 match golden polynomials in both types";
  return out;
}

Outcome shat_identity() {
  Outcome out;
  int checked = 0;
  std::string boundary_note;
  for (int k = 0; k <= 3; ++k) {
    const auto t = tau_grading(14);
    const auto c = c_grading(14);
    for (int s = k + 1; s <= 6; ++s) {
      const QPoly lhs = tau_to_c(k, quadratic_relation_b(s, k, t)) * mpq_class(4);
      const QPoly rhs = change_coefficients<mpq_class>(quadratic_relation_c(s, c));
      ++checked;
      if (lhs == rhs) continue;
      // locate the discrepancy: is it only the c_{2s} boundary term?
      QPoly diff = lhs - rhs;
      bool boundary_only = diff.size() == 1 && diff.terms().begin()->first.exp(static_cast<std::size_t>(2 * s - 1)) == 1;
      out.fail("k=" + std::to_string(k) + " s=" + std::to_string(s) + (boundary_only ? " (boundary term only)" : ""));
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " identities exact with delta_0 = 1";
  return out;
}

Outcome diagrams() {
  Outcome out;
  int checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      for (auto t : {LieType::C, LieType::B}) {
        if (!diagram_check(n, k, t))
          out.fail(std::string(t == LieType::C ? "C" : "B") + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        ++checked;
      }
  if (out.pass) out.detail = std::to_string(checked) + " diagrams commute";
  return out;
}

Outcome witnesses() {
  Outcome out;
  for (auto t : {LieType::C, LieType::B})
    for (int k = 1; k <= 3; ++k) {
      const auto w = nonsurjectivity_witness(k, t);
      if (!w.certifies() || w.degree != 2 || w.domain_dim != 0 || w.codomain_rank != 1)
        out.fail(std::string(t == LieType::C ? "C" : "B") + " k=" + std::to_string(k));
    }
  if (out.pass) out.detail = "degree 2: domain 0, codomain rank 1 (c1 / tau1) for k=1,2,3";
  return out;
}

mpq_class random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 9), sign(0, 1);
  mpq_class x(num(rng) * (sign(rng) ? -1 : 1), den(rng));
  x.canonicalize();
  return x;
}

Outcome springer_consistency() {
  Outcome out;
  std::mt19937 rng(20240601);
  const std::vector<GroupSpec> groups = {GroupSpec(GroupFamily::SpC, 2), GroupSpec(GroupFamily::SpC, 3),
                                         GroupSpec(GroupFamily::SoB, 2), GroupSpec(GroupFamily::SoB, 3)};
  int points = 0;
  for (const auto& g : groups) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<mpq_class> t;
      for (int i = 0; i < g.n; ++i) t.push_back(random_rational(rng));
      const TorusElement te(g, t);
      const RatMatrix th = theta_matrix(te.matrix());
      if (th != theta_torus(te).matrix()) out.fail(g.name() + " torus/matrix mismatch");
      if (!in_lie_algebra(g, th)) out.fail(g.name() + " torus theta outside the Lie algebra");
      // a non-diagonal element: torus times two root elements
      const std::size_t N = g.dim();
      GroupMatrix x = te.matrix() * root_element(g, 0, 1, random_rational(rng)) *
                      root_element(g, N - 2, 0, random_rational(rng));
      if (!in_lie_algebra(g, theta_matrix(x))) out.fail(g.name() + " theta(g) outside the Lie algebra");
      ++points;
    }
  }
  if (out.pass) out.detail = std::to_string(points) + " torus points in Sp(4), Sp(6), SO(5), SO(7)";
  return out;
}

Outcome character_round_trip() {
  Outcome out;
  std::mt19937 rng(777);
  int trips = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const auto xg = cayley_square_grading(n);
    QPoly p(xg);
    for (int size = 0; size <= 4; ++size)
      for (const auto& lam : partitions_of(size)) {
        if (static_cast<int>(lam.size()) > n || rng() % 2) continue;
        QPoly m = monomial_symmetric(xg, lam);
        m *= random_rational(rng);
        p += m;
      }
    const auto back = is_omega1_polynomial(char_from_symmetric(p));
    if (!back || *back != p) out.fail("round trip failed for " + to_string(p));
    ++trips;
  }
  const LaurentCharacter odd{1, parse_polynomial<mpq_class, true>("t1 + t1^-1", torus_grading(1))};
  if (is_omega1_polynomial(odd)) out.fail("t + 1/t accepted");
  if (out.pass) out.detail = std::to_string(trips) + " round trips exact; t + 1/t rejected";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Betti agreement", 60, betti_agreement},
      {2, "P^3 model", 1, p3_model},
      {3, "Freeness", 60, freeness},
      {4, "Stability of transitions", 30, stability},
      {5, "Injectivity of xi_k (type C)", 120, [] { return desk_scale_injectivity(LieType::C); }},
      {6, "Injectivity of xi_k (type B, c-subring)", 120, [] { return desk_scale_injectivity(LieType::B); }},
      {7, "Generator-image identities", 1, generator_images},
      {8, "Shat rewrite identity", 1, shat_identity},
      {9, "Diagram commutativity", 30, diagrams},
      {10, "Non-surjectivity witness", 1, witnesses},
      {11, "Springer consistency", 5, springer_consistency},
      {12, "Character criterion round trip", 10, character_round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.budget_seconds) o.fail("over budget");
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
              << std::fixed << std::setprecision(3) << secs << "s / " << std::setprecision(0) << c.budget_seconds
              << "s]  " << o.detail << std::endl;
  }
  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : std::string("ALL 12 CRITERIA PASS"))
            << std::endl;
  return failures ? 1 : 0;
}
