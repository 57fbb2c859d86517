#include <taut/key.hpp>
#include <taut/multi_index.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <variant>

using namespace taut;

namespace {

MultiIndex tau(std::initializer_list<MultiIndex::Entry> e) { return MultiIndex(IndexKind::S0, e); }
MultiIndex kap(std::initializer_list<MultiIndex::Entry> e) { return MultiIndex(IndexKind::S1, e); }

} // namespace

TEST(WeightStats, Examples)
{
  auto s = weight_stats(tau({{0, 1}}));
  EXPECT_EQ(s.weighted_degree, 0);
  EXPECT_EQ(s.total_count, 1);
  EXPECT_EQ(s.factorial_product, 1);

  s = weight_stats(tau({{0, 2}, {1, 1}}));
  EXPECT_EQ(s.weighted_degree, 1);
  EXPECT_EQ(s.total_count, 3);
  EXPECT_EQ(s.factorial_product, 2);

  s = weight_stats(kap({{2, 1}, {3, 1}}));
  EXPECT_EQ(s.weighted_degree, 5);
  EXPECT_EQ(s.total_count, 2);
  EXPECT_EQ(s.factorial_product, 1);
}

TEST(MultiIndex, CanonicalForm)
{
  auto m = tau({{3, 1}, {0, 2}, {3, 0}, {0, 1}});
  ASSERT_EQ(m.entries().size(), 2u);
  EXPECT_EQ(m[0], 3u);
  EXPECT_EQ(m[3], 1u);
  EXPECT_EQ(m, tau({{0, 3}, {3, 1}}));
  EXPECT_TRUE(m.minus(3).plus(3) == m);
  EXPECT_EQ(m.minus(3).entries().size(), 1u);
  EXPECT_THROW(kap({{0, 1}}), std::invalid_argument);
  EXPECT_THROW(m.minus(5), std::invalid_argument);
}

TEST(MultiIndex, OrderIndependence)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<unsigned> list;
    const int len = static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) list.push_back(rng() % 5);
    auto a = MultiIndex::from_list(IndexKind::S0, list);
    std::shuffle(list.begin(), list.end(), rng);
    auto b = MultiIndex::from_list(IndexKind::S0, list);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.hash(), b.hash());
    auto sa = weight_stats(a), sb = weight_stats(b);
    EXPECT_EQ(sa.weighted_degree, sb.weighted_degree);
    EXPECT_EQ(sa.factorial_product, sb.factorial_product);
    EXPECT_EQ(multi_binomial(a, b), 1);
  }
}

TEST(MultiBinomial, Examples)
{
  EXPECT_EQ(multi_binomial(tau({{0, 2}}), tau({{0, 1}})), 2);
  EXPECT_EQ(multi_binomial(kap({{1, 1}, {2, 1}}), kap({{1, 1}})), 1);
  EXPECT_EQ(multi_binomial(kap({{1, 1}}), kap({{1, 2}})), 0);
  EXPECT_THROW(multi_binomial(tau({{1, 1}}), kap({{1, 1}})), std::invalid_argument);
}

TEST(SplitEnumerate, Examples)
{
  auto s = split_enumerate(tau({{0, 1}}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s[0].first.empty());
  EXPECT_EQ(s[0].second, tau({{0, 1}}));
  EXPECT_EQ(s[1].first, tau({{0, 1}}));
  EXPECT_TRUE(s[1].second.empty());

  s = split_enumerate(tau({{0, 2}}));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].coefficient, 1);
  EXPECT_EQ(s[1].coefficient, 2);
  EXPECT_EQ(s[2].coefficient, 1);

  s = split_enumerate(kap({{1, 1}, {2, 1}}));
  ASSERT_EQ(s.size(), 4u);
  for (const auto &x : s) EXPECT_EQ(x.coefficient, 1);
  // lexicographic in m': (0,0) (0,1) (1,0) (1,1)
  EXPECT_EQ(s[1].first, kap({{2, 1}}));
  EXPECT_EQ(s[2].first, kap({{1, 1}}));

  EXPECT_EQ(split_enumerate(MultiIndex(IndexKind::S1)).size(), 1u);
}

TEST(SplitEnumerate, CountsAndSums)
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    MultiIndex m(IndexKind::S0);
    for (int i = 0; i < 4; ++i) m.add(rng() % 4, rng() % 4);
    std::size_t expected = 1;
    for (const auto &[i, c] : m.entries()) expected *= c + 1;
    auto splits = split_enumerate(m);
    EXPECT_EQ(splits.size(), expected);
    for (const auto &s : splits) {
      EXPECT_EQ(s.first + s.second, m);
      EXPECT_EQ(s.coefficient, multi_binomial(m, s.first));
    }
  }
}

TEST(SplitEnumerate, BinomialRowSums)
{
  for (unsigned n = 0; n <= 12; ++n) {
    Integer total = 0;
    for (const auto &s : split_enumerate(MultiIndex::unit(IndexKind::S0, 0, n))) total += s.coefficient;
    EXPECT_EQ(total, Integer(1) << n) << n;
  }
}

TEST(MakeKey, Examples)
{
  auto k = make_key(0, tau({{0, 3}}), MultiIndex(IndexKind::S1));
  ASSERT_TRUE(std::holds_alternative<IntersectionKey>(k));
  EXPECT_EQ(std::get<IntersectionKey>(k).points(), 3);

  EXPECT_TRUE(std::holds_alternative<ZeroBracket>(make_key(1, tau({{0, 1}, {1, 1}}), MultiIndex(IndexKind::S1))));
  EXPECT_TRUE(std::holds_alternative<InvalidBracket>(make_key(0, tau({{0, 2}}), MultiIndex(IndexKind::S1))));
  EXPECT_THROW(make_key(2, tau({{0, 3}}), MultiIndex(IndexKind::S1)), unsupported_genus);
  EXPECT_THROW(make_key(0, kap({{1, 3}}), MultiIndex(IndexKind::S1)), std::invalid_argument);
}

TEST(MakeKey, ValidImpliesDimensionEquation)
{
  for (int g = 0; g <= 1; ++g)
    for (unsigned a = 0; a <= 5; ++a)
      for (unsigned b = 0; b <= 3; ++b)
        for (unsigned c = 0; c <= 3; ++c) {
          auto m = tau({{0, a}, {1, b}, {2, c}});
          auto p = kap({{1, b}, {2, a % 3}});
          auto out = make_key(g, m, p);
          if (auto *key = std::get_if<IntersectionKey>(&out)) {
            EXPECT_EQ(3 * g - 3 + m.count(), m.weighted_degree() + p.weighted_degree());
            EXPECT_GT(2 * g - 2 + key->points(), 0);
          }
        }
}

TEST(TextSyntax, ParseAndPrint)
{
  auto m = parse_multi_index(IndexKind::S0, "0:3,1:1");
  EXPECT_EQ(m, tau({{0, 3}, {1, 1}}));
  EXPECT_EQ(to_string(m), "0:3,1:1");
  EXPECT_TRUE(parse_multi_index(IndexKind::S1, "").empty());
  EXPECT_THROW(parse_multi_index(IndexKind::S1, "0:1"), std::invalid_argument);
  EXPECT_THROW(parse_multi_index(IndexKind::S0, "0-3"), std::invalid_argument);
  EXPECT_THROW(parse_multi_index(IndexKind::S0, "a:3"), std::invalid_argument);

  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-5")), "-5");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}
