#include <gtest/gtest.h>

#include <random>

#include "isogr/polynomial.hpp"
#include "isogr/polynomial_io.hpp"
#include "isogr/presentations.hpp"

using namespace isogr;

namespace {

GradingPtr cg(int n) { return c_grading(n); }

ZPoly P(const std::string& s, const GradingPtr& g) { return parse_polynomial<mpz_class>(s, g); }

ZPoly random_poly(std::mt19937& rng, const GradingPtr& g, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg / 2);
  ZPoly p(g);
  for (int t = 0; t < terms; ++t) {
    auto monos = monomials_of_degree(*g, 2 * deg(rng));
    if (monos.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    p.add_term(monos[pick(rng)], mpz_class(coef(rng)));
  }
  return p;
}

// Counts exponent vectors by exhaustive search over a box, independent of the
// recursive enumerator.
std::size_t brute_force_count(const std::vector<int>& degrees, int d) {
  std::size_t count = 0;
  std::vector<int> e(degrees.size(), 0);
  while (true) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * degrees[i];
    if (w == d) ++count;
    std::size_t i = 0;
    while (i < e.size()) {
      if ((e[i] + 1) * degrees[i] <= d) {
        ++e[i];
        break;
      }
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) break;
  }
  return count;
}

}  // namespace

TEST(Polycore, MulExamples) {
  auto g = cg(3);
  EXPECT_EQ(P("c1", g) * P("c1", g), P("c1^2", g));
  EXPECT_EQ(P("c1^2 - c2", g) * P("1", g), P("c1^2 - c2", g));
  EXPECT_EQ(P("c1 + c2", g) * P("c1 - c2", g), P("c1^2 - c2^2", g));
}

TEST(Polycore, MulRejectsMismatchedGrading) {
  EXPECT_THROW(P("c1", cg(2)) * P("tau1", tau_grading(2)), StructuralError);
}

TEST(Polycore, GradedComponentExamples) {
  auto g = cg(3);
  EXPECT_EQ(P("c1^2 - c2", g).graded_component(4), P("c1^2 - c2", g));
  EXPECT_EQ(P("1 + c1", g).graded_component(0), P("1", g));
  EXPECT_TRUE(P("c1^3 - 2*c1*c2 + c3", g).graded_component(2).is_zero());
}

TEST(Polycore, MonomialsOfDegreeExamples) {
  auto g = cg(2);
  auto m4 = monomials_of_degree(*g, 4);
  ASSERT_EQ(m4.size(), 2u);
  EXPECT_EQ(m4[0].exps(), (std::vector<int>{2, 0}));
  EXPECT_EQ(m4[1].exps(), (std::vector<int>{0, 1}));
  auto m0 = monomials_of_degree(*g, 0);
  ASSERT_EQ(m0.size(), 1u);
  EXPECT_TRUE(m0[0].is_one());
  auto m6 = monomials_of_degree(*cg(3), 6);
  ASSERT_EQ(m6.size(), 3u);
  EXPECT_EQ(m6[0].exps(), (std::vector<int>{3, 0, 0}));
  EXPECT_EQ(m6[1].exps(), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(m6[2].exps(), (std::vector<int>{0, 0, 1}));
}

TEST(Polycore, MonomialsOfDegreeRestricted) {
  auto g = cg(3);
  auto m = monomials_of_degree(*g, 6, std::vector<std::size_t>{0, 2});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].exps(), (std::vector<int>{3, 0, 0}));
  EXPECT_EQ(m[1].exps(), (std::vector<int>{0, 0, 1}));
}

TEST(Polycore, MonomialCountsMatchBruteForce) {
  const std::vector<std::vector<int>> gradings = {{1}, {1, 1}, {2, 4, 6}, {1, 2, 3, 4}, {2, 2, 3, 5, 7},
                                                  {1, 2, 3, 4, 5, 6, 7, 8}, {4, 8, 12}};
  for (const auto& degs : gradings) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < degs.size(); ++i) names.push_back("v" + std::to_string(i));
    auto g = make_grading(names, degs);
    for (int d = 0; d <= 20; ++d) {
      auto monos = monomials_of_degree(*g, d);
      EXPECT_EQ(monos.size(), brute_force_count(degs, d)) << "d=" << d;
      for (std::size_t i = 1; i < monos.size(); ++i) EXPECT_TRUE(MonomialOrder{}(monos[i - 1], monos[i]));
    }
  }
}

TEST(Polycore, SubstituteExamples) {
  auto c = cg(2), t = tau_grading(2), e = indexed_grading("e", 1, 4);
  std::vector<std::optional<ZPoly>> img{ZPoly::variable(t, 0), ZPoly::variable(t, 1) * mpz_class(2)};
  EXPECT_EQ(substitute<ZPoly>(P("c2", c), img, t), parse_polynomial<mpz_class>("2*tau2", t));

  std::vector<std::optional<ZPoly>> e_img{P("c1^2", c)};
  EXPECT_EQ(substitute<ZPoly>(parse_polynomial<mpz_class>("e1", e), e_img, c), P("c1^2", c));

  std::vector<std::optional<ZPoly>> kill{ZPoly::variable(c, 0), ZPoly(c)};
  EXPECT_EQ(substitute<ZPoly>(P("c1^2 - c2", c), kill, c), P("c1^2", c));
}

TEST(Polycore, SubstituteMissingImage) {
  auto c = cg(2);
  std::vector<std::optional<ZPoly>> img{ZPoly::variable(c, 0), std::nullopt};
  EXPECT_NO_THROW(substitute<ZPoly>(P("c1^2", c), img, c));
  EXPECT_THROW(substitute<ZPoly>(P("c1*c2", c), img, c), StructuralError);
}

TEST(Polycore, RingAxiomsRandomized) {
  std::mt19937 rng(7);
  auto g = cg(4);
  for (int trial = 0; trial < 60; ++trial) {
    ZPoly a = random_poly(rng, g, 8, 4), b = random_poly(rng, g, 8, 4), c = random_poly(rng, g, 8, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    const ZPoly ab = a * b;
    for (const auto& [m, x] : ab.terms()) EXPECT_NE(sgn(x), 0);
  }
}

TEST(Polycore, GradingOfProducts) {
  std::mt19937 rng(11);
  auto g = cg(3);
  for (int trial = 0; trial < 40; ++trial) {
    ZPoly p = random_poly(rng, g, 8, 5), q = random_poly(rng, g, 8, 5);
    ZPoly pq = p * q;
    for (int d = 0; d <= 16; d += 2) {
      ZPoly sum(g);
      for (int a = 0; a <= d; a += 2) sum += p.graded_component(a) * q.graded_component(d - a);
      EXPECT_EQ(pq.graded_component(d), sum);
    }
    ZPoly recon(g);
    for (int d : p.degrees()) recon += p.graded_component(d);
    EXPECT_EQ(recon, p);
  }
}

TEST(Polycore, SubstituteIsHomomorphism) {
  std::mt19937 rng(5);
  auto src = cg(3), dst = tau_grading(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::optional<ZPoly>> img;
    for (int i = 0; i < 3; ++i) {
      // homogeneous image of degree 2(i+1) keeps the map graded
      ZPoly x(dst);
      for (const auto& m : monomials_of_degree(*dst, 2 * (i + 1))) x.add_term(m, mpz_class(int(rng() % 7) - 3));
      img.emplace_back(x);
    }
    ZPoly p = random_poly(rng, src, 6, 3), q = random_poly(rng, src, 6, 3);
    EXPECT_EQ(substitute<ZPoly>(p * q, img, dst), substitute<ZPoly>(p, img, dst) * substitute<ZPoly>(q, img, dst));
    EXPECT_EQ(substitute<ZPoly>(p + q, img, dst), substitute<ZPoly>(p, img, dst) + substitute<ZPoly>(q, img, dst));
  }
}

TEST(Polycore, CanonicalRendering) {
  auto g = cg(3);
  EXPECT_EQ(to_string(P("-2*c2 + c1^2", g)), "c1^2 - 2*c2");
  EXPECT_EQ(to_string(P("c3 + c1^3 - 2*c1*c2", g)), "c1^3 - 2*c1*c2 + c3");
  EXPECT_EQ(to_string(ZPoly(g)), "0");
  EXPECT_EQ(to_string(parse_polynomial<mpq_class>("3/4*c1 - 1/2", g)), "3/4*c1 - 1/2");
}

TEST(Polycore, JsonRoundTrip) {
  auto g = cg(3);
  ZPoly p = P("c1^3 - 2*c1*c2 + 123456789012345678901234567890*c3", g);
  auto j = to_json(p);
  EXPECT_EQ(j["vars"], nlohmann::json({"c1", "c2", "c3"}));
  EXPECT_EQ(j["degrees"], nlohmann::json({2, 4, 6}));
  EXPECT_EQ(j["terms"][0]["exp"], nlohmann::json({3, 0, 0}));
  EXPECT_EQ(j["terms"][2]["coef"], "123456789012345678901234567890");
  EXPECT_EQ(polynomial_from_json<mpz_class>(nlohmann::json::parse(j.dump())), p);
}

TEST(Polycore, Mod2Reduction) {
  auto g = cg(4);
  ZPoly s2 = quadratic_relation_c(2, g);
  EXPECT_EQ(change_coefficients<Gf2>(s2), parse_polynomial<Gf2>("c2^2", g));
}

TEST(Polycore, LaurentArithmetic) {
  auto t = make_grading({"t1"}, {1});
  auto f = parse_polynomial<mpq_class, true>("t1 - t1^-1", t);
  EXPECT_EQ(f * f, (parse_polynomial<mpq_class, true>("t1^2 - 2 + t1^-2", t)));
  EXPECT_THROW(parse_polynomial<mpz_class>("c1^-1", cg(1)), StructuralError);
}

TEST(Polycore, CoefficientInvariants) {
  mpq_class x(6, -4);
  x.canonicalize();
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(Gf2(3).value(), 1);
  EXPECT_EQ(coeff_cast<Gf2>(mpz_class(-3)), Gf2(1));
  EXPECT_THROW(coeff_cast<mpz_class>(mpq_class(1, 2)), DomainError);
}
