#include <gtest/gtest.h>

#include <algorithm>

#include "glink/error.hpp"
#include "glink/lifting.hpp"
#include "oracles.hpp"

using namespace glink;

namespace {

MonomialIdealInput mono(const RingPtr& r, std::vector<std::string> gens) {
  return MonomialIdealInput::from_ideal(Ideal::parse(r, gens));
}

// Number of monomials outside a monomial ideal, by enumeration up to `max_degree`.
std::size_t standard_monomials(const MonomialIdealInput& I, unsigned max_degree) {
  std::size_t count = 0;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto& m : oracle::monomials_of_degree(I.ring->nvars(), d)) {
      bool inside = false;
      for (const auto& g : I.generators) inside = inside || g.divides(m);
      count += !inside;
    }
  return count;
}

bool vanishes_at(const Ideal& J, std::vector<std::int64_t> coords) {
  const auto& F = J.ring()->field();
  std::vector<FieldElement> v;
  for (auto c : coords) v.push_back(F.from_int(c));
  for (const auto& g : J.generators())
    if (!g.evaluate(std::span<const FieldElement>(v)).is_zero()) return false;
  return true;
}

}  // namespace

TEST(LiftMonomial, Examples) {
  auto S = PolyRing::make({"x", "y", "t"});
  EXPECT_EQ(lift_monomial(S, Monomial{2, 0, 0}, 2), parse_polynomial(S, "x^2 - x*t"));
  EXPECT_EQ(lift_monomial(S, Monomial{1, 1, 0}, 2), parse_polynomial(S, "x*y"));
  Polynomial c = lift_monomial(S, Monomial{3, 0, 0}, 2);
  EXPECT_EQ(c, parse_polynomial(S, "x^3 - 3*x^2*t + 2*x*t^2"));
  EXPECT_TRUE(c.is_homogeneous());
  EXPECT_EQ(c.degree(), 3);
  EXPECT_THROW(lift_monomial(S, Monomial{1, 0, 1}, 2), AlgebraError);
}

TEST(LiftMonomial, SmallPrimeRejected) {
  auto R = PolyRing::make({"x", "y"}, 3);
  EXPECT_THROW(lift_ideal(mono(R, {"x^3", "y"})), AlgebraError);
  EXPECT_NO_THROW(lift_ideal(mono(R, {"x^2", "y"})));
}

TEST(MonomialInput, DropsRedundantGenerators) {
  auto R = PolyRing::make({"x", "y"});
  auto I = mono(R, {"x^2", "x^3*y", "x^2", "y^2", "x*y^5"});
  EXPECT_EQ(I.generators.size(), 2u);
  EXPECT_THROW(MonomialIdealInput::from_ideal(Ideal::parse(R, {"x + y"})), AlgebraError);
}

TEST(LiftIdeal, ThreePointsInThePlane) {
  auto R = PolyRing::make({"x", "y"});
  auto L = lift_ideal(mono(R, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(L.J, Ideal::parse(L.S, {"x^2 - x*t", "x*y", "y^2 - y*t"}));
  // the three points [x:y:t]
  EXPECT_TRUE(vanishes_at(L.J, {0, 0, 1}));
  EXPECT_TRUE(vanishes_at(L.J, {1, 0, 1}));
  EXPECT_TRUE(vanishes_at(L.J, {0, 1, 1}));
  EXPECT_FALSE(vanishes_at(L.J, {1, 1, 1}));
  for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(oracle::hilbert_function(L.J.generators(), L.S, d), 3u);
  EXPECT_EQ(degree(L.J), 3);
}

TEST(LiftIdeal, TrivialAndOneVariable) {
  auto R = PolyRing::make({"x", "y"});
  auto L = lift_ideal(mono(R, {"x"}));
  EXPECT_EQ(L.J, Ideal::parse(L.S, {"x"}));

  auto R1 = PolyRing::make({"x"});
  auto L1 = lift_ideal(mono(R1, {"x^3"}));
  // roots 0, t, 2t
  EXPECT_TRUE(vanishes_at(L1.J, {0, 1}));
  EXPECT_TRUE(vanishes_at(L1.J, {1, 1}));
  EXPECT_TRUE(vanishes_at(L1.J, {2, 1}));
  EXPECT_FALSE(vanishes_at(L1.J, {3, 1}));
  auto cert = verify_lifting(L1, Rng(1));
  EXPECT_TRUE(cert.passed());
  ASSERT_TRUE(cert.reduced);
  EXPECT_TRUE(*cert.reduced);
}

TEST(VerifyLifting, SquareOfTheMaximalIdealInTwoVariables) {
  auto R = PolyRing::make({"x", "y"});
  auto cert = verify_lifting(lift_ideal(mono(R, {"x^2", "x*y", "y^2"})), Rng(2));
  for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_TRUE(cert.passed());
  EXPECT_EQ(cert.bound, 8u);
}

TEST(VerifyLifting, NonCohenMacaulayInputReported) {
  auto R = PolyRing::make({"x", "y"});
  auto cert = verify_lifting(lift_ideal(mono(R, {"x^2", "x*y"})), Rng(3));
  EXPECT_TRUE(cert.check("J : t = J"));
  EXPECT_TRUE(cert.check("(J, t) = (I S, t)"));
  EXPECT_TRUE(cert.check("HF(S/(J, t)) = HF(R/I)"));
  EXPECT_FALSE(cert.check("S/J Cohen-Macaulay"));
  EXPECT_FALSE(cert.input_cohen_macaulay);
  EXPECT_TRUE(cert.passed());
  EXPECT_FALSE(cert.reduced);
}

TEST(VerifyLifting, FatPointModelInFourVariables) {
  auto R = PolyRing::standard(4);
  auto I = mono(R, {"x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
  auto cert = verify_lifting(lift_ideal(I), Rng(4));
  for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_TRUE(cert.lift_cohen_macaulay);
}

TEST(Properties, RandomArtinianIdealsLiftToReducedPoints) {
  Rng rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    Rng r = rng.child(trial);
    std::size_t n = 2 + (r.next() % 2);
    auto R = PolyRing::standard(n);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(i, 1 + (r.next() % 3)));
    for (int extra = 0; extra < 3; ++extra) {
      std::vector<int> e(n);
      for (auto& v : e) v = static_cast<int>((r.next() % 3));
      gens.emplace_back(std::span<const int>(e));
    }
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); }), gens.end());
    auto I = MonomialIdealInput::make(R, gens);
    auto L = lift_ideal(I);
    auto cert = verify_lifting(L, r.child("verify"));
    for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << trial << ": " << c.name << " " << c.detail;
    // number of points equals dim_K R/I
    EXPECT_EQ(degree(L.J), static_cast<std::int64_t>(standard_monomials(I, 12)));
    // t is a nonzerodivisor and setting t = 0 gives I back
    EXPECT_TRUE(is_regular_element(L.J, Polynomial::variable(L.S, n)));
  }
}
