// Frequency-window tests: piecewise structure, frozen high-precision values,
// dilation scaling, admissibility checking, and the spatial transform's
// closed-form behaviour on single-bin spectra.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wavesig/wavelet.hpp"

namespace {

using namespace wavesig;

constexpr double kPi = std::numbers::pi;

TEST(Window, ZeroOutsideSupport) {
  const WaveletSpec spec;
  for (double w : {-1.0, 0.0, 0.5, 2.0 / 3.0 - 1e-12, 5.0 / 3.0, 2.0, 100.0}) {
    EXPECT_EQ(eval_meyer_window(spec, w), 0.0) << "w=" << w;
  }
}

TEST(Window, PlateauIsExactlyOne) {
  const WaveletSpec spec;
  for (double w : {5.0 / 6.0, 1.0, 1.2, 4.0 / 3.0 - 1e-9}) {
    EXPECT_EQ(eval_meyer_window(spec, w), 1.0) << "w=" << w;
  }
}

TEST(Window, EdgeMidpointsAreInvSqrt2) {
  // At the midpoint of either transition band the profile passes through 1/2,
  // so the window value is cos(pi/4) for every smoothness order.
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (int order = 1; order <= 8; ++order) {
    WaveletSpec spec;
    spec.transition.smoothness_order = order;
    EXPECT_NEAR(eval_meyer_window(spec, 0.75), inv_sqrt2, 1e-15) << "order=" << order;
    EXPECT_NEAR(eval_meyer_window(spec, 1.5), inv_sqrt2, 1e-15) << "order=" << order;
  }
}

TEST(Window, FrozenReferenceValues) {
  // High-precision evaluations of the closed-form window, frozen from an
  // independent 30-digit computation.
  WaveletSpec order1;
  WaveletSpec order3;
  order3.transition.smoothness_order = 3;

  EXPECT_NEAR(eval_meyer_window(order1, 0.7), 0.1626371651948836, 1e-15);
  EXPECT_NEAR(eval_meyer_window(order1, kPi / 4.0), 0.95077562385275492, 1e-15);
  EXPECT_NEAR(eval_meyer_window(order1, kPi / 2.0), 0.30988015923483178, 1e-15);
  EXPECT_NEAR(eval_meyer_window(order1, 1.45), 0.90365321335982739, 1e-15);

  // The order-3 polynomial leaves a couple of ulp to operation ordering, so
  // these four get an extra decade of slack.
  EXPECT_NEAR(eval_meyer_window(order3, 0.7), 0.052352688434050333, 1e-14);
  EXPECT_NEAR(eval_meyer_window(order3, kPi / 4.0), 0.98496199672424716, 1e-14);
  EXPECT_NEAR(eval_meyer_window(order3, kPi / 2.0), 0.17277113476788918, 1e-14);
  EXPECT_NEAR(eval_meyer_window(order3, 1.45), 0.95113136933201276, 1e-14);
}

TEST(Window, DilationRescalesSupportLinearly) {
  WaveletSpec unit;
  WaveletSpec stretched;
  stretched.dilation = 3.0;
  const auto support = window_support(stretched);
  EXPECT_DOUBLE_EQ(support[0], 2.0);
  EXPECT_DOUBLE_EQ(support[1], 5.0);
  for (double w : {0.7, 0.8, 1.0, 1.4, 1.6}) {
    EXPECT_NEAR(eval_meyer_window(stretched, 3.0 * w), eval_meyer_window(unit, w), 1e-15);
  }
  EXPECT_EQ(eval_meyer_window(stretched, 1.9), 0.0);
  EXPECT_EQ(eval_meyer_window(stretched, 5.0), 0.0);
}

TEST(Window, ContinuousAtSupportEdges) {
  const WaveletSpec spec;
  // Just inside either edge the window tends to zero.
  EXPECT_LT(eval_meyer_window(spec, 2.0 / 3.0 + 1e-7), 1e-3);
  EXPECT_LT(eval_meyer_window(spec, 5.0 / 3.0 - 1e-7), 1e-3);
}

TEST(Window, RejectsBadInputs) {
  WaveletSpec bad;
  bad.dilation = 0.0;
  EXPECT_THROW(eval_meyer_window(bad, 1.0), std::invalid_argument);
  bad.dilation = -2.0;
  EXPECT_THROW(eval_meyer_window(bad, 1.0), std::invalid_argument);
  const WaveletSpec good;
  EXPECT_THROW(eval_meyer_window(good, std::nan("")), std::invalid_argument);
}

TEST(Spectrum, SampleSpectrumEvaluatesTheWindow) {
  const WaveletSpec spec;
  const std::vector<double> grid{0.0, 0.5, 0.75, 1.0, 1.5, 2.0};
  const auto spectrum = sample_spectrum(spec, grid);
  ASSERT_EQ(spectrum.values.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(spectrum.values[i], eval_meyer_window(spec, grid[i]));
  }
  ASSERT_TRUE(spectrum.source_spec.has_value());
  EXPECT_EQ(spectrum.support[0], 2.0 / 3.0);
  EXPECT_EQ(spectrum.support[1], 5.0 / 3.0);
}

TEST(Spectrum, RejectsNonIncreasingGrid) {
  const WaveletSpec spec;
  EXPECT_THROW(sample_spectrum(spec, {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(sample_spectrum(spec, {1.0, 0.5}), std::invalid_argument);
  EXPECT_THROW(sample_spectrum(spec, {}), std::invalid_argument);
}

TEST(Spectrum, DefaultGridCoversSupportAndPasses) {
  for (int order : {1, 3}) {
    for (double dilation : {1.0, 3.0}) {
      WaveletSpec spec;
      spec.transition.smoothness_order = order;
      spec.dilation = dilation;
      const auto spectrum = make_wavelet_spectrum(spec);
      const auto report = check_admissibility(spectrum);
      EXPECT_TRUE(report.pass()) << "order=" << order << " s=" << dilation;
    }
  }
}

TEST(Admissibility, FlagsNegativeValues) {
  auto spectrum = make_wavelet_spectrum(WaveletSpec{});
  spectrum.values[spectrum.values.size() / 2] = -0.1;
  const auto report = check_admissibility(spectrum);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.nonnegative);
}

TEST(Admissibility, FlagsMassAtNonPositiveFrequency) {
  WaveletSpectrum spectrum;
  spectrum.freq_grid = {-1.0, 0.0, 1.0, 2.0};
  spectrum.values = {0.5, 0.0, 1.0, 0.0};
  spectrum.support = {2.0 / 3.0, 5.0 / 3.0};
  const auto report = check_admissibility(spectrum);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.one_sided);
}

TEST(Admissibility, FlagsGridNotCoveringSupport) {
  const WaveletSpec spec;
  // Grid stops short of the upper support edge.
  const auto spectrum = sample_spectrum(spec, std::vector<double>{0.0, 0.7, 1.0});
  const auto report = check_admissibility(spectrum);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.compact);
}

TEST(Admissibility, FlagsIdenticallyZeroWindow) {
  const WaveletSpec spec;
  // All grid points outside the support: window is zero everywhere sampled.
  WaveletSpectrum spectrum;
  spectrum.freq_grid = {0.1, 0.2, 0.3, 5.0};
  spectrum.values = {0.0, 0.0, 0.0, 0.0};
  spectrum.support = {2.0 / 3.0, 5.0 / 3.0};
  const auto report = check_admissibility(spectrum);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.nonzero);
  (void)spec;
}

TEST(SpatialWavelet, SingleBinSpectrumGivesPureExponential) {
  // With exactly one nonzero sample v at frequency w0, the Riemann-sum
  // transform is kappa(x) = v e^{i w0 x} dw / (2 pi) exactly.
  WaveletSpectrum spectrum;
  const double dw = 0.25;
  for (int j = 0; j <= 16; ++j) spectrum.freq_grid.push_back(dw * j);
  spectrum.values.assign(spectrum.freq_grid.size(), 0.0);
  const std::size_t bin = 5;
  const double v = 0.8;
  spectrum.values[bin] = v;
  spectrum.support = {spectrum.freq_grid[bin], spectrum.freq_grid[bin]};

  const auto spatial = spatial_wavelet(spectrum, 64);
  ASSERT_EQ(spatial.values.size(), 64u);
  for (std::size_t m = 0; m < spatial.x.size(); ++m) {
    const std::complex<double> expected =
        v * std::polar(1.0, spectrum.freq_grid[bin] * spatial.x[m]) * (dw / (2.0 * kPi));
    EXPECT_NEAR(std::abs(spatial.values[m] - expected), 0.0, 1e-15);
  }
  // Period of the x range is 2 pi / dw.
  const double span = spatial.x.back() - spatial.x.front();
  EXPECT_NEAR(span, 2.0 * kPi / dw * 63.0 / 64.0, 1e-12);
}

TEST(SpatialWavelet, RealSpectrumGivesConjugateSymmetry) {
  const auto spectrum = make_wavelet_spectrum(WaveletSpec{}, 512);
  const auto spatial = spatial_wavelet(spectrum, 128);
  // x grid is symmetric about 0 (m and n - m mirror, m = 0 is the far left).
  for (std::size_t m = 1; m < 64; ++m) {
    const auto left = spatial.values[64 - m];
    const auto right = spatial.values[64 + m];
    EXPECT_NEAR(std::abs(left - std::conj(right)), 0.0, 1e-12) << "m=" << m;
  }
}

TEST(SpatialWavelet, RejectsNonUniformGrid) {
  WaveletSpectrum spectrum;
  spectrum.freq_grid = {0.0, 0.3, 1.0};
  spectrum.values = {0.0, 1.0, 0.0};
  spectrum.support = {0.3, 0.3};
  EXPECT_THROW(spatial_wavelet(spectrum, 16), std::invalid_argument);
}

}  // namespace
