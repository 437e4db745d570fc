#include <gtest/gtest.h>

#include <random>

#include "rootgame/grassmann_problem.hpp"
#include "rootgame/pictures_lr.hpp"

using namespace rootgame;

namespace {

Partition P(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

// nu/lambda is a horizontal strip: at most one box per column.
bool horizontal_strip(const Partition& lambda, const Partition& nu) {
  if (!nu.contains(lambda)) return false;
  const auto l = lambda.parts(), v = nu.parts();
  for (std::size_t r = 1; r < v.size(); ++r)
    if (v[r] > (r - 1 < l.size() ? l[r - 1] : 0)) return false;
  return true;
}

}  // namespace

TEST(PartitionBasics, FrenchRowsAndComplement) {
  const Partition p = Partition::parse("1,2,3");
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(p, Partition::parse("0,1,2,3"));
  EXPECT_EQ(p.complement(3, 7), Partition::parse("4,5,6"));
  EXPECT_EQ(Partition::parse("1,1,2").shifted(3), Partition::parse("4,4,5"));
  EXPECT_THROW(Partition::parse("3,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("1,1").shifted(-1), std::invalid_argument);
  EXPECT_TRUE(Partition::parse("6,6,7").contains(Partition::parse("4,4,5")));
  EXPECT_FALSE(Partition::parse("1,3").contains(Partition::parse("2,2")));
  EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
}

TEST(LR, SpecExamples) {
  EXPECT_EQ(lr_coefficient(P({1}), P({1}), P({2})), 1u);
  EXPECT_EQ(lr_coefficient(P({1}), P({1}), P({1, 1})), 1u);
  EXPECT_EQ(lr_coefficient(P({3, 1}), P({}), P({3, 1})), 1u);
  EXPECT_EQ(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})), 2u);
  EXPECT_EQ(lr_coefficient(P({2}), P({1}), P({2})), 0u);
  EXPECT_GE(lr_coefficient(Partition::parse("1,2,3"), Partition::parse("4,4,5"), Partition::parse("6,6,7")), 1u);
  EXPECT_EQ(lr_tableaux(P({2, 1}), P({2, 1}), P({3, 2, 1})).size(), 2u);
}

TEST(LR, PieriRule) {
  for (const Partition& lambda : partitions_in_box(3, 3)) {
    for (int k = 1; k <= 3; ++k) {
      for (const Partition& nu : partitions_in_box(4, 5)) {
        if (nu.size() != lambda.size() + k) continue;
        EXPECT_EQ(lr_coefficient(P({k}), lambda, nu), horizontal_strip(lambda, nu) ? 1u : 0u)
            << lambda.to_string() << " " << nu.to_string();
      }
    }
  }
}

TEST(LR, Symmetry) {
  const auto shapes = partitions_in_box(3, 3);
  for (const Partition& a : shapes)
    for (const Partition& b : shapes)
      for (const Partition& nu : partitions_in_box(3, 4))
        if (a.size() + b.size() == nu.size()) EXPECT_EQ(lr_coefficient(a, b, nu), lr_coefficient(b, a, nu));
}

TEST(Pictures, SpecExamples) {
  EXPECT_EQ(enumerate_pictures(Partition{}, SkewShape(Partition{}, Partition{})).size(), 1u);
  EXPECT_TRUE(enumerate_pictures(P({2}), SkewShape(P({2}), P({1}))).empty());
  EXPECT_EQ(count_pictures(P({2}), SkewShape(P({1, 1}), P({}))), 0u);
  EXPECT_EQ(count_pictures(P({2}), SkewShape(P({2}), P({}))), 1u);

  const Partition l1 = Partition::parse("1,2,3");
  const SkewShape skew(Partition::parse("6,6,7"), Partition::parse("4,4,5"));
  const auto pictures = enumerate_pictures(l1, skew);
  EXPECT_EQ(pictures.size(), lr_coefficient(l1, Partition::parse("4,4,5"), Partition::parse("6,6,7")));
  for (const Picture& f : pictures) EXPECT_TRUE(is_picture(l1, skew, f));
  for (std::size_t k = 1; k < pictures.size(); ++k) EXPECT_LT(pictures[k - 1].image, pictures[k].image);
  ASSERT_TRUE(first_picture(l1, skew).has_value());
  EXPECT_EQ(*first_picture(l1, skew), pictures.front());
}

TEST(Pictures, ValidatorRejectsBadMaps) {
  const Partition l1 = P({2});
  const SkewShape skew(P({2}), P({}));
  Picture f = *first_picture(l1, skew);
  std::swap(f.image[0], f.image[1]);
  EXPECT_FALSE(is_picture(l1, skew, f));
  f.image.pop_back();
  EXPECT_FALSE(is_picture(l1, skew, f));
}

TEST(Schur, SpecExamples) {
  const std::vector<Partition> one = {P({2, 1})};
  const auto single = schur_product_expand(one);
  EXPECT_EQ(single.terms().size(), 1u);
  EXPECT_EQ(single.coefficient(P({2, 1})), 1u);

  const std::vector<Partition> two = {P({1}), P({1})};
  const auto pieri = schur_product_expand(two, std::make_pair(2, 2));
  EXPECT_EQ(pieri.terms().size(), 2u);
  EXPECT_EQ(pieri.coefficient(P({2})), 1u);
  EXPECT_EQ(pieri.coefficient(P({1, 1})), 1u);
}

TEST(Schur, AssociativityAndTruncation) {
  const std::vector<Partition> shapes = {P({1}), P({2}), P({1, 1}), P({2, 1}), P({2, 2})};
  for (const auto& a : shapes)
    for (const auto& b : shapes)
      for (const auto& c : shapes) {
        const auto left = SchurExpansion::single(a).times(b).times(c);
        const auto right = SchurExpansion::single(a).times(SchurExpansion::single(b).times(c));
        EXPECT_EQ(left, right);
        const std::vector<Partition> parts = {a, b, c};
        const auto boxed = schur_product_expand(parts, std::make_pair(3, 3));
        for (const auto& [nu, k] : left.terms())
          EXPECT_EQ(boxed.coefficient(nu), nu.fits(3, 3) ? k : 0u) << nu.to_string();
      }
}

TEST(GrassmannIntersection, SpecExamples) {
  GrassmannProblem worked{{ZeroOneString("1010101")}, ZeroOneString("1001011"), ZeroOneString("0100111"), 3};
  EXPECT_EQ(grassmann_intersection(worked),
            lr_coefficient(Partition::parse("1,2,3"), Partition::parse("4,4,5"), Partition::parse("6,6,7")));

  GrassmannProblem p1{{ZeroOneString("10")}, ZeroOneString("10"), ZeroOneString("01"), 1};
  EXPECT_EQ(grassmann_intersection(p1), 0u);

  // Point class against the identity classes.
  GrassmannProblem point{{ZeroOneString("1100")}, ZeroOneString("0011"), ZeroOneString("0011"), 2};
  EXPECT_EQ(grassmann_intersection(point), 1u);

  GrassmannProblem bad{{ZeroOneString("101")}, ZeroOneString("0011"), ZeroOneString("0011"), 2};
  EXPECT_THROW(grassmann_intersection(bad), std::invalid_argument);
}

TEST(GrassmannIntersection, ReversalIsComplement) {
  for (int n = 1; n <= 7; ++n)
    for (int l = 0; l <= n; ++l)
      for (const auto& w : ZeroOneString::all(n - l, l)) {
        EXPECT_EQ(shape_of_string(w.reversed()), shape_of_string(w).complement(n - l, l)) << w.str();
        EXPECT_EQ(ZeroOneString::from_shape(shape_of_string(w), n - l, l), w);
      }
}

TEST(GrassmannIntersection, SymmetricInItsClasses) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 3, l = 1 + trial % (n - 2);
    const auto words = ZeroOneString::all(n - l, l);
    auto pick = [&] { return words[rng() % words.size()]; };
    GrassmannProblem p{{pick(), pick()}, pick(), pick(), l};
    GrassmannProblem q{{p.sigmas[1], p.sigmas[0]}, p.nu, p.mu, l};
    GrassmannProblem r{{p.mu, p.sigmas[1]}, p.sigmas[0], p.nu, l};
    EXPECT_EQ(grassmann_intersection(p), grassmann_intersection(q));
    EXPECT_EQ(grassmann_intersection(p), grassmann_intersection(r));
  }
}
