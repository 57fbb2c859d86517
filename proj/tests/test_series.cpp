#include <taut/identities.hpp>
#include <taut/series.hpp>

#include <gtest/gtest.h>

using namespace taut;

namespace {

const std::vector<std::string> kVars{"t0", "t1", "s1"};

Rational q(long n, long d = 1) { return Rational(n, d); }

MultiIndex tau(std::initializer_list<MultiIndex::Entry> e = {}) { return MultiIndex(IndexKind::S0, e); }
MultiIndex kap(std::initializer_list<MultiIndex::Entry> e = {}) { return MultiIndex(IndexKind::S1, e); }

} // namespace

TEST(Series, LogOfOneIsZero)
{
  auto one = TruncatedSeries::constant(kVars, 5, 1);
  EXPECT_TRUE(log(one).is_zero());
  EXPECT_TRUE(exp(TruncatedSeries(kVars, 5)) == one);
}

TEST(Series, PartialOfCube)
{
  auto t0 = TruncatedSeries::variable(kVars, 3, "t0");
  auto f = t0 * t0 * t0 * q(1, 6);
  auto d = partial(partial(partial(f, "t0"), "t0"), "t0");
  EXPECT_EQ(d.max_degree(), 0u);
  EXPECT_EQ(d.constant_term(), 1);
  EXPECT_EQ(d.terms().size(), 1u);
}

TEST(Series, ExpLogInverse)
{
  auto one = TruncatedSeries::constant(kVars, 7, 1);
  auto f = one + TruncatedSeries::variable(kVars, 7, "t0");
  EXPECT_TRUE(exp(log(f)) == f);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_series(rng, kVars, 6, 6);
    g.set(Exponents{0, 0, 0}, 0);
    EXPECT_TRUE(log(exp(g)) == g);
    EXPECT_TRUE(exp(log(one + g)) == one + g);
  }
}

TEST(Series, ConstantTermPreconditions)
{
  auto f = TruncatedSeries::constant(kVars, 3, 2);
  EXPECT_THROW(log(f), std::invalid_argument);
  EXPECT_THROW(exp(f), std::invalid_argument);
  EXPECT_THROW(f.coefficient(Exponents{1, 0}), std::invalid_argument);
  EXPECT_THROW(f + TruncatedSeries({"x"}, 3), std::invalid_argument);
}

TEST(Series, TruncationIsRespected)
{
  auto x = TruncatedSeries::variable({"x"}, 4, "x");
  auto p = x * x * x * x * x;
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.max_degree(), 4u);
  auto lo = TruncatedSeries::variable({"x"}, 2, "x");
  EXPECT_EQ((x + lo).max_degree(), 2u);
}

TEST(Series, GradedLexOrder)
{
  TruncatedSeries s({"a", "b"}, 3);
  s.set({0, 2}, 1);
  s.set({1, 1}, 1);
  s.set({2, 0}, 1);
  s.set({0, 1}, 1);
  s.set({0, 0}, 1);
  std::vector<Exponents> order;
  for (const auto &[e, c] : s.terms()) order.push_back(e);
  EXPECT_EQ(order, (std::vector<Exponents>{{0, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
}

TEST(Series, ProductRule)
{
  auto r = check_product_rule(12345, 30);
  EXPECT_TRUE(r.ok()) << r.first_counterexample.value_or("");
  EXPECT_EQ(r.checked, 90u);
}

TEST(BuildH, GenusZeroPsiOnly)
{
  Evaluator ev;
  auto h = build_H(ev, 0, {0, 0, 3});
  ASSERT_EQ(h.terms().size(), 1u);
  EXPECT_EQ(h.coefficient({3}), q(1, 6));
}

TEST(BuildH, GenusOneCoefficients)
{
  Evaluator ev;
  SeriesBounds b{2, 2, 4};
  auto h = build_H(ev, 1, b);
  EXPECT_EQ(h.coefficient(b.exponents(tau({{1, 1}}), kap())), q(1, 24));
  EXPECT_EQ(h.coefficient(b.exponents(tau({{1, 1}}), kap({{1, 1}}))), 0);
  EXPECT_EQ(h.coefficient(b.exponents(tau({{0, 1}}), kap({{1, 1}}))), q(1, 24));
  // <tau_0^2 kappa_1^2>_1 / (2! 2!)
  EXPECT_EQ(h.coefficient(b.exponents(tau({{0, 2}}), kap({{1, 2}}))), q(1, 32));
}

TEST(BuildH, NestedBoundsAgree)
{
  Evaluator ev;
  SeriesBounds small{1, 1, 4}, large{3, 2, 6};
  for (int g = 0; g <= 1; ++g) {
    auto hs = build_H(ev, g, small), hl = build_H(ev, g, large);
    small.for_each_monomial([&](const Exponents &e) {
      EXPECT_EQ(hs.coefficient(e), hl.coefficient(large.exponents(small.tau_part(e), small.kappa_part(e))));
    });
  }
}

TEST(BuildH, KappaDerivativeMatchesExtraInsertion)
{
  Evaluator ev;
  SeriesBounds b{2, 3, 6};
  for (int g = 0; g <= 1; ++g) {
    auto h = build_H(ev, g, b);
    for (unsigned a = 1; a <= b.s_max; ++a) {
      auto d = partial(h, b.t_max + a);
      SeriesBounds inner = b;
      inner.degree = b.degree - 1;
      inner.for_each_monomial([&](const Exponents &e) {
        const auto m = inner.tau_part(e), p = inner.kappa_part(e);
        const Rational direct =
            ev.value_or_zero(g, m, p.plus(a)) / Rational(weight_stats(m).factorial_product * weight_stats(p).factorial_product);
        EXPECT_EQ(d.coefficient(e), direct);
      });
    }
  }
}

TEST(Charge, Passes)
{
  Evaluator ev;
  for (int g = 0; g <= 1; ++g) {
    auto r = check_charge(ev, g, {3, 3, 6});
    EXPECT_TRUE(r.ok());
    EXPECT_GE(r.checked, 10u);
  }
}

TEST(GenusOneRelation, Passes)
{
  Evaluator ev;
  SeriesBounds b{3, 3, 5};
  auto r = check_genus_one_relation(ev, b);
  EXPECT_TRUE(r.ok()) << r.first_counterexample.value_or("");
  EXPECT_EQ(r.max_discrepancy, 0);
}

TEST(GenusOneRelation, SpotCoefficients)
{
  Evaluator ev;
  SeriesBounds b{1, 1, 3}, wide{1, 1, 6};
  auto d3 = build_H(ev, 0, wide);
  for (int i = 0; i < 3; ++i) d3 = partial(d3, std::size_t{0});
  auto rhs = log(d3) * q(1, 24);
  auto lhs = build_H(ev, 1, b);
  // t1: <tau_1>_1 = 1/24, and [t1] d0^3 H0 = <tau_0^3 tau_1>_0 = 1
  EXPECT_EQ(lhs.coefficient({0, 1, 0}), q(1, 24));
  EXPECT_EQ(d3.coefficient({0, 1, 0}), 1);
  EXPECT_EQ(rhs.coefficient({0, 1, 0}), q(1, 24));
  // t0 s1: <tau_0 kappa_1>_1 = 1/24
  EXPECT_EQ(lhs.coefficient({1, 0, 1}), q(1, 24));
  EXPECT_EQ(rhs.coefficient({1, 0, 1}), q(1, 24));
  // s1 alone lives on M_{1,0}: both sides vanish
  EXPECT_EQ(lhs.coefficient({0, 0, 1}), 0);
  EXPECT_EQ(rhs.coefficient({0, 0, 1}), 0);
  EXPECT_EQ(rhs.constant_term(), 0);
}

TEST(Annihilators, AllVanish)
{
  Evaluator ev;
  for (int g = 0; g <= 1; ++g)
    for (const auto &r : check_annihilators(ev, g, {2, 2, 5})) EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_counterexample.value_or("");
}

TEST(Annihilators, DroppingGenusZeroConstantIsDetected)
{
  Evaluator ev;
  SeriesBounds b{1, 1, 3};
  Annihilator first{Annihilator::Kind::First, 0};
  auto res = annihilator_residual(ev, 0, first, b, {false, true});
  EXPECT_EQ(res.coefficient(b.exponents(tau({{0, 2}}), kap())), q(-1, 2));
  EXPECT_TRUE(annihilator_residual(ev, 0, first, b).is_zero());
}

TEST(Annihilators, DroppingGenusOneConstantIsDetected)
{
  Evaluator ev;
  SeriesBounds b{1, 1, 3};
  auto res1 = annihilator_residual(ev, 1, {Annihilator::Kind::First, 0}, b, {true, false});
  EXPECT_EQ(res1.coefficient(b.exponents(tau(), kap({{1, 1}}))), q(-1, 24));
  auto res2 = annihilator_residual(ev, 1, {Annihilator::Kind::Second, 0}, b, {true, false});
  EXPECT_EQ(res2.constant_term(), q(-1, 24));
  // genus zero does not see the genus one constants
  EXPECT_TRUE(annihilator_residual(ev, 0, {Annihilator::Kind::Second, 0}, b, {true, false}).is_zero());
}
