#include <gtest/gtest.h>

#include <random>

#include "rootgame/flag_oracle.hpp"
#include "test_support.hpp"

using namespace rootgame;
using testing_support::all_permutations;

TEST(SchubertPolynomial, SpecExamples) {
  EXPECT_EQ(schubert_polynomial(Permutation::identity(4), 4), SparsePolynomial::constant(1));
  EXPECT_EQ(schubert_polynomial(Permutation::longest(4), 4), SparsePolynomial::monomial({3, 2, 1}));
  EXPECT_EQ(schubert_polynomial(Permutation::parse("213"), 3), SparsePolynomial::monomial({1}));
  EXPECT_EQ(schubert_polynomial(Permutation::parse("132"), 3).to_string(), "x2 + x1");
  EXPECT_THROW(schubert_polynomial(Permutation::parse("2134"), 3), std::invalid_argument);
}

TEST(SchubertPolynomial, DegreeAndStability) {
  for (const Permutation& w : all_permutations(5)) {
    const auto p = schubert_polynomial(w, 5);
    EXPECT_EQ(p.degree(), w.length());
    EXPECT_EQ(p, schubert_polynomial(w, 6));
    EXPECT_EQ(p, schubert_polynomial_transition(w));
    for (const auto& [m, c] : p.terms()) EXPECT_GT(c, 0);
  }
}

TEST(SchubertBasis, SpecExamples) {
  for (const Permutation& w : all_permutations(4)) {
    const auto e = expand_in_schubert_basis(schubert_polynomial(w, 4));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e.begin()->first, w.trimmed());
    EXPECT_EQ(e.begin()->second, 1);
  }
  // x1^2 is the Schubert polynomial of 312, whose code is (2,0,0).
  const auto square = expand_in_schubert_basis(SparsePolynomial::monomial({2}));
  ASSERT_EQ(square.size(), 1u);
  EXPECT_EQ(square.begin()->first, Permutation::parse("312"));

  const auto x = schubert_polynomial(Permutation::parse("213"), 3);
  const auto product = expand_in_schubert_basis(x * x);
  EXPECT_TRUE(in_schubert_cone(product));
  EXPECT_EQ(product.at(Permutation::parse("312")), 1);

  const auto mixed = expand_in_schubert_basis(SparsePolynomial::monomial({1}) - SparsePolynomial::monomial({0, 1}));
  EXPECT_FALSE(in_schubert_cone(mixed));
}

TEST(SchubertBasis, ExpansionReconstructsProducts) {
  std::mt19937 rng(23);
  const auto perms = all_permutations(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Permutation& a = perms[rng() % perms.size()];
    const Permutation& b = perms[rng() % perms.size()];
    const auto p = schubert_polynomial(a, 4) * schubert_polynomial(b, 4);
    const auto e = expand_in_schubert_basis(p);
    EXPECT_TRUE(in_schubert_cone(e));
    SparsePolynomial back;
    for (const auto& [w, c] : e) back = back + schubert_polynomial_transition(w).scaled(c);
    EXPECT_EQ(back, p);
    for (const auto& [w, c] : e) EXPECT_EQ(schubert_coefficient(p, w), c);
  }
}

TEST(FlagIntersection, SpecExamples) {
  const std::vector<Permutation> point = {Permutation::longest(4)};
  EXPECT_EQ(flag_intersection(point, 4), 1u);
  const std::vector<Permutation> dual = {Permutation::parse("213"), Permutation::parse("231")};
  EXPECT_EQ(flag_intersection(dual, 3), 1u);
  const std::vector<Permutation> triple = {Permutation::parse("213"), Permutation::parse("213"),
                                           Permutation::parse("132")};
  EXPECT_EQ(flag_intersection(triple, 3), flag_intersection_monk(triple, 3));
  EXPECT_EQ(flag_intersection(triple, 3), 1u);
  const std::vector<Permutation> low = {Permutation::parse("213"), Permutation::parse("132")};
  EXPECT_EQ(flag_intersection(low, 3), 0u);
}

TEST(FlagIntersection, OraclesAgreeExhaustivelyOnS4) {
  const auto perms = all_permutations(4);
  for (const auto& a : perms)
    for (const auto& b : perms)
      for (const auto& c : perms) {
        if (a.length() + b.length() + c.length() != 6) continue;
        const std::vector<Permutation> t = {a, b, c};
        ASSERT_EQ(flag_intersection(t, 4), flag_intersection_monk(t, 4))
            << a.to_string() << " " << b.to_string() << " " << c.to_string();
      }
}

TEST(FlagIntersection, OrderInvariantOnS5Sample) {
  std::mt19937 rng(29);
  const auto perms = all_permutations(5);
  int checked = 0;
  while (checked < 60) {
    const auto& a = perms[rng() % perms.size()];
    const auto& b = perms[rng() % perms.size()];
    const auto& c = perms[rng() % perms.size()];
    if (a.length() + b.length() + c.length() != 10) continue;
    ++checked;
    const std::vector<Permutation> t1 = {a, b, c}, t2 = {c, a, b}, t3 = {b, c, a};
    const auto v = flag_intersection(t1, 5);
    EXPECT_EQ(v, flag_intersection(t2, 5));
    EXPECT_EQ(v, flag_intersection(t3, 5));
    EXPECT_EQ(v, flag_intersection_monk(t1, 5));
  }
}

TEST(MonkProduct, PointClassSquares) {
  const std::vector<Permutation> sq = {Permutation::parse("213"), Permutation::parse("213")};
  const auto product = monk_product(sq, 3);
  ASSERT_EQ(product.size(), 1u);
  EXPECT_EQ(product.begin()->first, Permutation::parse("312"));
}
