// Sign-statistics tests on hand-built coefficient fields: complex sign with
// a magnitude floor, mean resultant vector, strict-threshold classification,
// canonical-angle labeling with its tie rule, running-mean diagnostic, and
// non-maximum suppression.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "wavesig/signature.hpp"

namespace {

using namespace wavesig;
using cdouble = std::complex<double>;

constexpr double kPi = std::numbers::pi;

CoefficientField make_field(std::size_t n_scales, std::size_t n_positions,
                            const std::vector<cdouble>& values) {
  CoefficientField field;
  field.scale_grid = make_scale_grid(1.0, 1, int(n_scales));
  field.n_positions = n_positions;
  field.values = values;
  return field;
}

TEST(ComplexSign, UnitModulusAndZeroHandling) {
  EXPECT_EQ(complex_sign(cdouble(0, 0)), cdouble(0, 0));
  EXPECT_NEAR(std::abs(complex_sign(cdouble(3, 4)) - cdouble(0.6, 0.8)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(complex_sign(cdouble(0, -2)) - cdouble(0, -1)), 0.0, 1e-15);
}

TEST(ComplexSign, FloorSuppressesSmallMagnitudes) {
  EXPECT_EQ(complex_sign(cdouble(1e-13, 0), 1e-12), cdouble(0, 0));
  // Boundary is strict: |z| must exceed the floor.
  EXPECT_EQ(complex_sign(cdouble(1e-12, 0), 1e-12), cdouble(0, 0));
  EXPECT_NEAR(std::abs(complex_sign(cdouble(2e-12, 0), 1e-12) - cdouble(1, 0)), 0.0, 1e-15);
  EXPECT_THROW(complex_sign(cdouble(1, 0), -1.0), std::invalid_argument);
}

TEST(MeanResultant, AveragesSignsAcrossScales) {
  // Two scales, three positions. Column 0: aligned +i signs (mean +i);
  // column 1: opposite signs (mean 0); column 2: one zero pairing, one +1
  // (mean 1/2 - zeros still count in the denominator).
  const auto field = make_field(2, 3,
                                {cdouble(0, 2), cdouble(5, 0), cdouble(0, 0),
                                 cdouble(0, 7), cdouble(-3, 0), cdouble(4, 0)});
  const auto w = mean_resultant(field, 0.0);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_NEAR(std::abs(w[0] - cdouble(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[2] - cdouble(0.5, 0)), 0.0, 1e-15);
}

TEST(MeanResultant, DefaultFloorIsRelativeToLargestPairing) {
  // One pairing is 1e-13 of the largest: below the default 1e-12 relative
  // floor, so it contributes a zero sign, not a phase.
  const auto field = make_field(2, 1, {cdouble(1e13, 0), cdouble(0, 1)});
  const auto w = mean_resultant(field);
  EXPECT_NEAR(std::abs(w[0] - cdouble(0.5, 0)), 0.0, 1e-15);
}

TEST(Classify, StrictThreshold) {
  // |w| = 0.5 at tau = 0.5 must stay unclassified; just above passes.
  const std::vector<cdouble> w{cdouble(0.5, 0), cdouble(0.500001, 0), cdouble(0, -0.9)};
  const auto field = classify(w, 0.5);
  EXPECT_EQ(field.sigma[0], cdouble(0, 0));
  EXPECT_EQ(field.arg_sigma[0], 0.0);
  EXPECT_NEAR(std::abs(field.sigma[1] - cdouble(1, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(field.sigma[2] - cdouble(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(field.arg_sigma[2], -kPi / 2.0, 1e-15);
  ASSERT_EQ(field.detected.size(), 2u);
  EXPECT_EQ(field.detected[0], 1u);
  EXPECT_EQ(field.detected[1], 2u);
}

TEST(Classify, PopulatesDerivedColumns) {
  const std::vector<cdouble> w{cdouble(0.3, 0.4)};
  const auto field = classify(w, 0.25);
  EXPECT_NEAR(field.abs_w[0], 0.5, 1e-15);
  EXPECT_NEAR(field.rho[0], 0.5, 1e-15);
  EXPECT_NEAR(std::abs(field.sigma[0] - cdouble(0.6, 0.8)), 0.0, 1e-15);
}

TEST(Classify, RejectsDegenerateThresholds) {
  const std::vector<cdouble> w{cdouble(0.9, 0)};
  EXPECT_THROW(classify(w, 0.0), std::invalid_argument);
  EXPECT_THROW(classify(w, 1.0), std::invalid_argument);
  EXPECT_THROW(classify(w, -0.5), std::invalid_argument);
}

TEST(Label, CanonicalAnchors) {
  EXPECT_EQ(symmetry_label(cdouble(0, 1)).label, FeatureLabel::step_up);
  EXPECT_EQ(symmetry_label(cdouble(0, -1)).label, FeatureLabel::step_down);
  EXPECT_EQ(symmetry_label(cdouble(1, 0)).label, FeatureLabel::cusp_down);
  EXPECT_EQ(symmetry_label(cdouble(-1, 0)).label, FeatureLabel::cusp_up);
  EXPECT_NEAR(symmetry_label(cdouble(0, 1)).distance, 0.0, 1e-15);
}

TEST(Label, NearestAnchorWins) {
  // 0.2 rad from +pi/2.
  const cdouble near_step_up = std::polar(1.0, kPi / 2.0 - 0.2);
  const auto match = symmetry_label(near_step_up);
  EXPECT_EQ(match.label, FeatureLabel::step_up);
  EXPECT_NEAR(match.distance, 0.2, 1e-12);
  // Just past the diagonal toward the real axis.
  EXPECT_EQ(symmetry_label(std::polar(1.0, kPi / 4.0 - 0.01)).label, FeatureLabel::cusp_down);
  EXPECT_EQ(symmetry_label(std::polar(1.0, -3.0 * kPi / 4.0 - 0.01)).label,
            FeatureLabel::cusp_up);
}

TEST(Label, ExactTiesPreferSteps) {
  // The four diagonal angles are equidistant from a step anchor and a cusp
  // anchor; the step interpretation wins each tie.
  EXPECT_EQ(symmetry_label(std::polar(1.0, kPi / 4.0)).label, FeatureLabel::step_up);
  EXPECT_EQ(symmetry_label(std::polar(1.0, 3.0 * kPi / 4.0)).label, FeatureLabel::step_up);
  EXPECT_EQ(symmetry_label(std::polar(1.0, -kPi / 4.0)).label, FeatureLabel::step_down);
  EXPECT_EQ(symmetry_label(std::polar(1.0, -3.0 * kPi / 4.0)).label, FeatureLabel::step_down);
}

TEST(Label, RejectsZeroSignature) {
  EXPECT_THROW(symmetry_label(cdouble(0, 0)), std::invalid_argument);
}

TEST(Label, StringNames) {
  EXPECT_STREQ(to_string(FeatureLabel::step_up), "step-up");
  EXPECT_STREQ(to_string(FeatureLabel::step_down), "step-down");
  EXPECT_STREQ(to_string(FeatureLabel::cusp_down), "cusp-down");
  EXPECT_STREQ(to_string(FeatureLabel::cusp_up), "cusp-up");
}

TEST(Cesaro, RunningMeansOfSigns) {
  const auto field = make_field(3, 1, {cdouble(2, 0), cdouble(0, 3), cdouble(-1, 0)});
  const auto partial = cesaro_diagnostic(field, 0, 0.0);
  ASSERT_EQ(partial.size(), 3u);
  EXPECT_NEAR(std::abs(partial[0] - cdouble(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(partial[1] - cdouble(0.5, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(partial[2] - cdouble(0, 1.0 / 3.0)), 0.0, 1e-15);
  EXPECT_THROW(cesaro_diagnostic(field, 5, 0.0), std::invalid_argument);
}

SignatureField classify_abs(const std::vector<double>& abs_values, double tau) {
  std::vector<cdouble> w(abs_values.size());
  for (std::size_t b = 0; b < abs_values.size(); ++b) w[b] = cdouble(0, abs_values[b]);
  return classify(w, tau);
}

TEST(Nms, KeepsOnlyLocalMaxima) {
  // Detections at 1, 2, 3 with |w| 0.8 < 0.9 < 0.85: only index 2 survives a
  // +-1 window.
  auto field = classify_abs({0.1, 0.8, 0.9, 0.85, 0.1}, 0.7);
  ASSERT_EQ(field.detected.size(), 3u);
  apply_nms(field, 1);
  ASSERT_EQ(field.detected.size(), 1u);
  EXPECT_EQ(field.detected[0], 2u);
  EXPECT_EQ(field.sigma[1], cdouble(0, 0));
  EXPECT_EQ(field.arg_sigma[1], 0.0);
  EXPECT_EQ(field.sigma[3], cdouble(0, 0));
  // The surviving peak keeps its signature.
  EXPECT_NEAR(std::abs(field.sigma[2] - cdouble(0, 1)), 0.0, 1e-15);
}

TEST(Nms, WindowIsCircular) {
  // Peak at the last index suppresses a weaker detection at index 0.
  auto field = classify_abs({0.8, 0.1, 0.1, 0.1, 0.9}, 0.7);
  apply_nms(field, 1);
  ASSERT_EQ(field.detected.size(), 1u);
  EXPECT_EQ(field.detected[0], 4u);
}

TEST(Nms, PlateausAreAllKept) {
  auto field = classify_abs({0.1, 0.9, 0.9, 0.1, 0.1}, 0.7);
  apply_nms(field, 2);
  ASSERT_EQ(field.detected.size(), 2u);
  EXPECT_EQ(field.detected[0], 1u);
  EXPECT_EQ(field.detected[1], 2u);
}

TEST(Nms, SeparatedPeaksBothSurvive) {
  // Two detections farther apart than the window keep each other.
  auto field = classify_abs({0.9, 0.1, 0.1, 0.1, 0.8, 0.1, 0.1, 0.1}, 0.7);
  apply_nms(field, 2);
  ASSERT_EQ(field.detected.size(), 2u);
  EXPECT_EQ(field.detected[0], 0u);
  EXPECT_EQ(field.detected[1], 4u);
}

TEST(Nms, RejectsNonPositiveWindow) {
  auto field = classify_abs({0.9, 0.1}, 0.5);
  EXPECT_THROW(apply_nms(field, 0), std::invalid_argument);
}

}  // namespace
