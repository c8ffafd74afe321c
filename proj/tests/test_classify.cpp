#include "bidisk/classify.hpp"
#include "bidisk/surfaces.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bidisk;

namespace {

SurfaceInvariants inv(long K2, std::optional<long> chi, std::optional<long> P2, std::optional<long> q, TensorStatus t) {
  return {K2, chi, P2, q, t};
}

bool has_label(const Classification& c, const std::string& label) {
  return std::any_of(c.evidence.begin(), c.evidence.end(),
                     [&](const std::string& e) { return e.rfind(label + ":", 0) == 0; });
}

}  // namespace

TEST(Classify, BidiskProfile) {
  const auto c = classify(inv(8, 1, 9, 0, TensorStatus::semi_special_unique()));
  EXPECT_EQ(c.verdict, Verdict::Bidisk);
  EXPECT_TRUE(has_label(c, rule::kTensorDichotomy));
  EXPECT_TRUE(has_label(c, rule::kBidisk));
  EXPECT_TRUE(has_label(c, rule::kSplitProfile));
  EXPECT_TRUE(c.contradiction_reason.empty());
}

TEST(Classify, QuadricProfile) {
  const auto c = classify(inv(8, 1, 0, 0, TensorStatus::semi_special_unique()));
  EXPECT_EQ(c.verdict, Verdict::Quadric);
  EXPECT_TRUE(has_label(c, rule::kQuadric));
  EXPECT_TRUE(has_label(c, rule::kQuadricProfile));
}

TEST(Classify, BallProfile) {
  const auto c = classify(inv(9, 1, 3, 0, TensorStatus::none()));
  EXPECT_EQ(c.verdict, Verdict::Ball);
  EXPECT_TRUE(has_label(c, rule::kMiyaokaYau));
}

TEST(Classify, TorusIsNotCovered) {
  const auto c = classify(inv(0, 0, 3, 2, TensorStatus::special_dim(3)));
  EXPECT_EQ(c.verdict, Verdict::NotCovered);
  EXPECT_TRUE(has_label(c, rule::kNotCovered));
  ASSERT_EQ(c.warnings.size(), 1U);
  EXPECT_NE(c.warnings[0].find("open question"), std::string::npos);
}

TEST(Classify, BidiskWithLargerEuler) {
  const auto c = classify(inv(16, 2, 5, std::nullopt, TensorStatus::semi_special_exists()));
  EXPECT_EQ(c.verdict, Verdict::Bidisk);
  EXPECT_TRUE(has_label(c, rule::kSplitProfile));
  EXPECT_NE(c.evidence.back().find("pass"), std::string::npos);
}

TEST(Classify, BigenusOneIsContradiction) {
  const auto c = classify(inv(8, 1, 1, 0, TensorStatus::semi_special_unique()));
  EXPECT_EQ(c.verdict, Verdict::Contradiction);
  EXPECT_TRUE(has_label(c, rule::kBigenusGap));
  EXPECT_EQ(c.contradiction_reason.rfind(rule::kBigenusGap, 0), 0U);
}

TEST(Classify, SeveralSpecialTensorsContradictUniqueness) {
  const auto c = classify(inv(8, 1, 9, 0, TensorStatus::special_dim(2)));
  EXPECT_EQ(c.verdict, Verdict::Contradiction);
  EXPECT_TRUE(has_label(c, rule::kUniqueness));
  EXPECT_EQ(c.contradiction_reason.rfind(rule::kUniqueness, 0), 0U);
}

TEST(Classify, BidiskOffTheSplitLineIsContradiction) {
  const auto c = classify(inv(9, 1, 10, 0, TensorStatus::semi_special_exists()));
  EXPECT_EQ(c.verdict, Verdict::Contradiction);
  EXPECT_EQ(c.contradiction_reason.rfind(rule::kSplitProfile, 0), 0U);
}

TEST(Classify, QuadricOffProfileIsContradiction) {
  const auto c = classify(inv(8, 1, 0, 1, TensorStatus::semi_special_exists()));
  EXPECT_EQ(c.verdict, Verdict::Contradiction);
  EXPECT_EQ(c.contradiction_reason.rfind(rule::kQuadricProfile, 0), 0U);
}

TEST(Classify, UnknownBigenusIsDichotomy) {
  const auto c = classify(inv(8, 1, std::nullopt, 0, TensorStatus::semi_special_unique()));
  EXPECT_EQ(c.verdict, Verdict::Dichotomy);
  EXPECT_TRUE(has_label(c, rule::kDichotomyOpen));
}

TEST(Classify, BallNeedsPositiveBigenusAndKnownChi) {
  EXPECT_EQ(classify(inv(9, 1, 0, 0, TensorStatus::none())).verdict, Verdict::NotCovered);
  EXPECT_EQ(classify(inv(9, std::nullopt, 3, 0, TensorStatus::none())).verdict, Verdict::NotCovered);
  // K2 = 9 chi = 0 must not be read as a ball quotient.
  EXPECT_EQ(classify(inv(0, 0, 1, 0, TensorStatus::none())).verdict, Verdict::NotCovered);
}

TEST(Classify, RejectsNegativeInvariants) {
  EXPECT_THROW(classify(inv(8, 1, -1, 0, TensorStatus::none())), std::invalid_argument);
  EXPECT_THROW(classify(inv(8, 1, 2, -1, TensorStatus::none())), std::invalid_argument);
  EXPECT_THROW(classify(inv(8, 1, 2, 0, TensorStatus::special_dim(-1))), std::invalid_argument);
}

TEST(Classify, SemiSpecialRefinementAgreesAwayFromBigenusOne) {
  for (long K2 = -4; K2 <= 20; ++K2)
    for (long chi = 0; chi <= 3; ++chi)
      for (long P2 = 0; P2 <= 6; ++P2) {
        if (P2 == 1) continue;
        const auto a = classify(inv(K2, chi, P2, std::nullopt, TensorStatus::semi_special_exists()));
        const auto b = classify(inv(K2, chi, P2, std::nullopt, TensorStatus::semi_special_unique()));
        EXPECT_EQ(a.verdict, b.verdict) << K2 << ' ' << chi << ' ' << P2;
      }
}

TEST(Classify, ProductSurfacesThroughKuenneth) {
  auto product_profile = [](int g1, int g2) {
    const auto p = product_invariants({g1, g2});
    return inv(p.K2, p.chi, product_bigenus({g1, g2}), p.q, TensorStatus::special_dim(product_special_tensor_dim({g1, g2})));
  };
  EXPECT_EQ(classify(product_profile(0, 0)).verdict, Verdict::Quadric);
  EXPECT_EQ(classify(product_profile(1, 1)).verdict, Verdict::NotCovered);
  EXPECT_EQ(classify(product_profile(1, 2)).verdict, Verdict::NotCovered);
  EXPECT_EQ(classify(product_profile(2, 2)).verdict, Verdict::Bidisk);
  EXPECT_EQ(classify(product_profile(3, 5)).verdict, Verdict::Bidisk);
}

TEST(MinBigenus, Formula) {
  EXPECT_EQ(min_bigenus(1, 8), 9);
  EXPECT_EQ(min_bigenus(1, 1), 2);
  EXPECT_EQ(min_bigenus(2, 16), 18);
  EXPECT_THROW(min_bigenus(0, 1), std::invalid_argument);
  for (long chi = 1; chi <= 20; ++chi)
    for (long K2 = 1; K2 <= 20; ++K2) EXPECT_GE(min_bigenus(chi, K2), 2);
}

TEST(DoubleCover, Additivity) {
  EXPECT_EQ(double_cover_dims(0, 1), 1);
  EXPECT_EQ(double_cover_dims(0, 0), 0);
  EXPECT_EQ(double_cover_dims(2, 3), 5);
  EXPECT_THROW(double_cover_dims(-1, 0), std::invalid_argument);
}

TEST(PolydiskProfile, TwoDimensional) {
  const auto pred = polydisk_necessary_profile(2);
  EXPECT_TRUE(pred(inv(8, std::nullopt, std::nullopt, std::nullopt, TensorStatus::semi_special_unique())));
  EXPECT_FALSE(pred(inv(0, std::nullopt, std::nullopt, std::nullopt, TensorStatus::semi_special_exists())));
  EXPECT_FALSE(pred(inv(8, std::nullopt, std::nullopt, std::nullopt, TensorStatus::none())));
  EXPECT_THROW(polydisk_necessary_profile(3), std::invalid_argument);
}
