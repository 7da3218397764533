#include <gtest/gtest.h>

#include "glink/error.hpp"
#include "glink/liaison.hpp"
#include "oracles.hpp"

using namespace glink;

namespace {

RingPtr P3() { return PolyRing::standard(4); }
Ideal I_(const RingPtr& r, std::vector<std::string> gens) { return Ideal::parse(r, gens); }
Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

Polynomial product_of_forms(const RingPtr& r, int count, Rng& rng) {
  Polynomial p = Polynomial::constant(r, 1);
  for (int i = 0; i < count; ++i) p = p * random_linear_form(r, rng);
  return p;
}

}  // namespace

TEST(CiLink, LineInPlanePair) {
  auto r = P3();
  Ideal line = I_(r, {"x1", "x2"});
  LinkStep s = ci_link(line, {P(r, "x1"), P(r, "x2*x3")}, Rng(1));
  ASSERT_TRUE(s.residual);
  EXPECT_EQ(*s.residual, I_(r, {"x1", "x3"}));
  // oracle: the residual contains x1, x3 and has the Hilbert function of a line
  for (unsigned d = 0; d <= 5; ++d)
    EXPECT_EQ(hilbert_function(*s.residual, d),
              static_cast<std::int64_t>(oracle::hilbert_function(I_(r, {"x1", "x3"}).generators(), r, d)));
  EXPECT_TRUE(s.check("degree additivity"));
  EXPECT_TRUE(s.check("geometric"));
  EXPECT_TRUE(s.passed());
}

TEST(CiLink, Preconditions) {
  auto r = P3();
  EXPECT_THROW(ci_link(I_(r, {"x1", "x2"}), {P(r, "x1*x2")}, Rng(1)), AlgebraError);
  try {
    ci_link(I_(r, {"x1", "x2"}), {P(r, "x1"), P(r, "x3")}, Rng(1));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("containment"), std::string::npos);
  }
}

TEST(Geometric, Examples) {
  auto r = P3();
  Ideal line = I_(r, {"x1", "x2"});
  Ideal c = I_(r, {"x1", "x2*x3"});
  EXPECT_TRUE(is_geometric_link(line, c, quotient(c, line)));
  Ideal self = I_(r, {"x1", "x2"});
  EXPECT_FALSE(is_geometric_link(self, self, quotient(self, self)));
}

TEST(Involution, Examples) {
  auto r = P3();
  EXPECT_TRUE(link_involution_check(I_(r, {"x1", "x2"}), I_(r, {"x1", "x2"})));
  EXPECT_TRUE(link_involution_check(I_(r, {"x1", "x2"}), I_(r, {"x1", "x2*x3"})));
}

TEST(Involution, RandomPointSetsAndCurves) {
  auto r = P3();
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Rng rng(100 + seed);
    // curves: union of lines cut by products of planes, linked by a larger product
    Polynomial a = product_of_forms(r, 2, rng), b = product_of_forms(r, 2, rng);
    Polynomial c1 = a * random_linear_form(r, rng), c2 = b * random_linear_form(r, rng);
    Ideal I(r, {a, b});
    Ideal c(r, {c1, c2});
    LinkStep s = ci_link(I, {c1, c2}, rng);
    EXPECT_TRUE(s.check("geometric"));
    EXPECT_TRUE(s.check("degree additivity"));
    EXPECT_TRUE(link_involution_check(I, c)) << "seed " << seed;
  }
}

TEST(GorensteinSum, TwoLinesMeetInAPoint) {
  auto r = P3();
  Ideal Y = I_(r, {"x1", "x2"});
  Ideal c = I_(r, {"x1", "x2*x3"});
  Ideal W = quotient(c, Y);
  auto g = gorenstein_sum(Y, W, c, Rng(2));
  // oracle: Y + W = (x1, x2, x3), whose Hilbert function is constantly 1
  for (unsigned d = 0; d <= 4; ++d)
    EXPECT_EQ(oracle::hilbert_function(ideal_sum(Y, W).generators(), r, d), 1u);
  EXPECT_EQ(g.ideal, I_(r, {"x1", "x2", "x3"}));
  EXPECT_EQ(g.certificate.h_vector.entries, std::vector<std::int64_t>{1});
  EXPECT_TRUE(g.certificate.passed());
  EXPECT_THROW(gorenstein_sum(Y, Ideal::unit(r), c, Rng(2)), AlgebraError);
}

TEST(KeyLink, FatPointInstance) {
  auto r = P3();
  Ideal I = I_(r, {"x1", "x2", "x3"});
  Ideal J = I_(r, {"x1", "x2", "x3", "x0^2"});
  LinkStep s = lemma_key_link(I, P(r, "x0"), J, Rng(3));
  EXPECT_EQ(*s.linking_ideal, I_(r, {"x1", "x2", "x3", "x0^3"}));
  EXPECT_TRUE(s.check("(I + fJ) : (I, f) = J"));
  EXPECT_TRUE(s.passed());
}

TEST(KeyLink, CompleteIntersectionInstance) {
  auto r = P3();
  Ideal I = I_(r, {"x1^2", "x2"});
  Ideal J = I_(r, {"x1^2", "x2", "x3"});
  EXPECT_TRUE(lemma_key_link(I, P(r, "x0"), J, Rng(4)).passed());
}

TEST(KeyLink, Preconditions) {
  auto r = P3();
  Ideal I = I_(r, {"x1", "x2", "x3"});
  Ideal J = I_(r, {"x1", "x2", "x3", "x0^2"});
  EXPECT_THROW(lemma_key_link(I, P(r, "1"), J, Rng(3)), AlgebraError);
  EXPECT_THROW(lemma_key_link(J, P(r, "x0"), I, Rng(3)), AlgebraError);
  EXPECT_THROW(lemma_key_link(I_(r, {"x0*x1"}), P(r, "x0"), I_(r, {"x0*x1", "x2"}), Rng(3)), AlgebraError);
}

TEST(KeyLink, RandomInstancesSatisfyIdentity) {
  for (std::size_t nv : {4u, 5u}) {
    auto r = PolyRing::standard(nv);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      Rng rng(seed * 7 + nv);
      int c = 2 + static_cast<int>(seed % 2);
      std::vector<Polynomial> gens;
      for (int k = 0; k < c; ++k) gens.push_back(product_of_forms(r, 1 + static_cast<int>(rng.next() % 2), rng));
      Ideal I(r, gens);
      ASSERT_EQ(codim(I), c);
      Ideal J = ideal_sum(I, std::vector<Polynomial>{product_of_forms(r, 2, rng)});
      LinkStep s = lemma_key_link(I, random_linear_form(r, rng), J, rng);
      EXPECT_TRUE(s.passed()) << "nvars " << nv << " seed " << seed;
    }
  }
}

TEST(Embed, ThreePointsInPlane) {
  auto r = PolyRing::standard(3);
  std::vector<Ideal> pts;
  for (auto c : std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}) {
    Point p;
    for (auto v : c) p.push_back(r->field().from_int(v));
    pts.push_back(point_ideal(r, p));
  }
  Ideal I = intersect_all(pts);
  Ideal E = embedded_ideal(I);
  std::vector<std::int64_t> hf;
  for (unsigned d = 0; d <= 5; ++d) hf.push_back(hilbert_function(E, d));
  EXPECT_EQ(hf, (std::vector<std::int64_t>{1, 3, 3, 3, 3, 3}));
  EXPECT_EQ(h_vector(I).entries, (std::vector<std::int64_t>{1, 2}));
  try {
    embed_and_link(I, std::nullopt, Rng(1), 8);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_STREQ(e.what(), "Gorenstein witness required");
  }
}

TEST(Embed, CompleteIntersectionAndHyperplane) {
  auto r = P3();
  auto res = embed_and_link(I_(r, {"x0^2 + x1*x2", "x1^2 - x3^2"}), std::nullopt, Rng(9), 8);
  EXPECT_TRUE(res.step.passed());
  EXPECT_TRUE(res.hilbert_function_preserved);
  EXPECT_EQ(codim(*res.step.residual), 3);
  EXPECT_EQ(res.embedded.ring()->nvars(), 5u);
  auto hyper = embed_and_link(I_(r, {"x0"}), std::nullopt, Rng(9), 6);
  EXPECT_TRUE(hyper.step.passed());
  EXPECT_TRUE(is_complete_intersection(hyper.embedded));
}

TEST(ProperIntersection, LineAndQuadric) {
  auto r = P3();
  auto rep = proper_ci_intersection_link(I_(r, {"x1", "x2"}), {P(r, "x0^2 + 3*x1*x3 - x3^2 + x0*x2")}, Rng(4));
  EXPECT_EQ(rep.steps.size(), 1u);
  EXPECT_EQ(degree(*rep.final_ideal), 2);
  EXPECT_TRUE(rep.passed());
}

TEST(ProperIntersection, WholeSpaceAndTwistedCubic) {
  auto r = P3();
  auto trivial = proper_ci_intersection_link(Ideal::zero(r), {P(r, "x0^2"), P(r, "x1^3")}, Rng(1));
  EXPECT_TRUE(trivial.steps.empty());
  EXPECT_TRUE(trivial.passed());
  Ideal cubic = I_(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  Polynomial plane = P(r, "x0 + 2*x1 - 5*x2 + 7*x3");
  EXPECT_THROW(proper_ci_intersection_link(cubic, {plane}, Rng(2)), AlgebraError);
  std::map<std::size_t, Ideal> w{{0, I_(r, {"x1", "x2", "x0*x3"})}};
  auto rep = proper_ci_intersection_link(cubic, {plane}, Rng(2), w);
  EXPECT_EQ(degree(*rep.final_ideal), 3);
  EXPECT_TRUE(rep.passed());
  EXPECT_THROW(proper_ci_intersection_link(I_(r, {"x1", "x2"}), {P(r, "x1")}, Rng(2)), AlgebraError);
}
