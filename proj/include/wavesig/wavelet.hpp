#pragma once

// Meyer-type analyzing wavelet, defined purely in the frequency domain: a
// real, nonnegative window supported on [2s/3, 5s/3] of the positive half
// axis only. A one-sided spectrum makes the spatial wavelet complex-valued,
// which is what lets the phase of a pairing carry feature information.
//
//   W(w) = cos(pi/2 g(5 - 6w))   2/3 <= w < 5/6
//          1                     5/6 <= w < 4/3
//          cos(pi/2 g(3w - 4))   4/3 <= w < 5/3
//          0                     otherwise
//
// with g a smoothstep profile (transition.hpp). The dilation parameter s
// stretches the support linearly: the window is evaluated at W(omega / s).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "transition.hpp"

namespace wavesig {

template <class Real = double>
struct BasicWaveletSpec {
  TransitionProfile transition{};
  Real dilation = Real(1);  // s > 0; support becomes [2s/3, 5s/3]
};
using WaveletSpec = BasicWaveletSpec<double>;

template <class Real>
std::array<Real, 2> window_support(const BasicWaveletSpec<Real>& spec) {
  return {spec.dilation * Real(2) / Real(3), spec.dilation * Real(5) / Real(3)};
}

template <class Real>
Real eval_meyer_window(const BasicWaveletSpec<Real>& spec, Real omega) {
  if (!(spec.dilation > Real(0)) || !std::isfinite(spec.dilation)) {
    throw std::invalid_argument("wavelet spec: dilation must be positive and finite");
  }
  if (!std::isfinite(omega)) {
    throw std::invalid_argument("wavelet window: non-finite frequency");
  }
  const Real u = omega / spec.dilation;
  constexpr Real half_pi = std::numbers::pi_v<Real> / Real(2);
  const Real lo = Real(2) / Real(3);
  const Real rise = Real(5) / Real(6);
  const Real fall = Real(4) / Real(3);
  const Real hi = Real(5) / Real(3);
  if (u < lo || u >= hi) return Real(0);
  if (u < rise) return std::cos(half_pi * eval_transition(spec.transition, Real(5) - Real(6) * u));
  if (u < fall) return Real(1);
  return std::cos(half_pi * eval_transition(spec.transition, Real(3) * u - Real(4)));
}

// A window sampled on a concrete frequency grid. Keeps the generating spec
// around (when produced by sample_spectrum) so downstream consumers can
// re-evaluate the window analytically at scaled frequencies instead of
// interpolating the samples.
template <class Real = double>
struct BasicWaveletSpectrum {
  std::vector<Real> freq_grid;  // strictly increasing angular frequencies
  std::vector<Real> values;     // window samples, >= 0
  std::array<Real, 2> support{Real(0), Real(0)};
  std::optional<BasicWaveletSpec<Real>> source_spec;
};
using WaveletSpectrum = BasicWaveletSpectrum<double>;

template <class Real>
BasicWaveletSpectrum<Real> sample_spectrum(const BasicWaveletSpec<Real>& spec,
                                           const std::vector<Real>& freq_grid) {
  if (freq_grid.empty()) throw std::invalid_argument("sample_spectrum: empty frequency grid");
  for (std::size_t i = 0; i < freq_grid.size(); ++i) {
    if (!std::isfinite(freq_grid[i])) {
      throw std::invalid_argument("sample_spectrum: non-finite grid frequency");
    }
    if (i > 0 && !(freq_grid[i] > freq_grid[i - 1])) {
      throw std::invalid_argument("sample_spectrum: grid must be strictly increasing");
    }
  }
  BasicWaveletSpectrum<Real> out;
  out.freq_grid = freq_grid;
  out.values.resize(freq_grid.size());
  for (std::size_t i = 0; i < freq_grid.size(); ++i) {
    out.values[i] = eval_meyer_window(spec, freq_grid[i]);
  }
  out.support = window_support(spec);
  out.source_spec = spec;
  return out;
}

// Samples the window on a uniform grid from 0 to 1.2x the upper support
// edge: the grid any consumer can use when it has no reason to pick its own.
template <class Real>
BasicWaveletSpectrum<Real> make_wavelet_spectrum(const BasicWaveletSpec<Real>& spec,
                                                 std::size_t n_bins = 2048) {
  if (n_bins < 2) throw std::invalid_argument("make_wavelet_spectrum: need at least 2 bins");
  const auto support = window_support(spec);
  const Real top = support[1] * Real(1.2);
  std::vector<Real> grid(n_bins);
  for (std::size_t j = 0; j < n_bins; ++j) {
    grid[j] = top * Real(j) / Real(n_bins - 1);
  }
  return sample_spectrum(spec, grid);
}

struct AdmissibilityReport {
  bool nonzero = true;        // at least one strictly positive sample
  bool nonnegative = true;    // no negative sample
  bool one_sided = true;      // no mass at frequencies <= 0
  bool compact = true;        // mass confined to the declared support, grid covers it
  std::vector<std::string> violations;

  bool pass() const { return nonzero && nonnegative && one_sided && compact; }
};

template <class Real>
AdmissibilityReport check_admissibility(const BasicWaveletSpectrum<Real>& spectrum) {
  AdmissibilityReport report;
  if (spectrum.freq_grid.size() != spectrum.values.size() || spectrum.values.empty()) {
    report.nonzero = false;
    report.violations.push_back("spectrum is empty or malformed (grid/value size mismatch)");
    return report;
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
    const Real w = spectrum.freq_grid[i];
    const Real v = spectrum.values[i];
    if (v < Real(0)) report.nonnegative = false;
    if (v != Real(0) && w <= Real(0)) report.one_sided = false;
    if (v != Real(0) && (w < spectrum.support[0] || w > spectrum.support[1])) {
      report.compact = false;
    }
    if (v > Real(0)) any_positive = true;
  }
  report.nonzero = any_positive;
  if (!(spectrum.support[0] < spectrum.support[1]) || !(spectrum.support[0] > Real(0))) {
    report.compact = false;
    report.violations.push_back("declared support is not an interval inside (0, inf)");
  }
  if (spectrum.freq_grid.front() > spectrum.support[0] ||
      spectrum.freq_grid.back() < spectrum.support[1]) {
    report.compact = false;
    report.violations.push_back("frequency grid does not cover the declared support");
  }
  if (!report.nonzero) report.violations.push_back("window is identically zero on the grid");
  if (!report.nonnegative) report.violations.push_back("window takes negative values");
  if (!report.one_sided) report.violations.push_back("window has mass at frequencies <= 0");
  if (!report.compact && report.violations.empty()) {
    report.violations.push_back("window has mass outside the declared support");
  }
  return report;
}

// Spatial samples of the wavelet: the inverse Fourier transform of the
// sampled spectrum, approximated by a Riemann sum over the grid,
//   kappa(x) = (1/2pi) sum_j values[j] e^{i w_j x} dw.
// The grid must be uniform; the x range is one spatial period L = 2 pi / dw,
// centered at 0. A real spectrum forces kappa(-x) = conj(kappa(x)).
template <class Real = double>
struct BasicSpatialWavelet {
  std::vector<Real> x;
  std::vector<std::complex<Real>> values;
};
using SpatialWavelet = BasicSpatialWavelet<double>;

template <class Real>
BasicSpatialWavelet<Real> spatial_wavelet(const BasicWaveletSpectrum<Real>& spectrum,
                                          std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("spatial_wavelet: need at least 2 samples");
  if (spectrum.freq_grid.size() < 2) {
    throw std::invalid_argument("spatial_wavelet: need at least 2 spectrum samples");
  }
  const Real dw = spectrum.freq_grid[1] - spectrum.freq_grid[0];
  for (std::size_t i = 1; i < spectrum.freq_grid.size(); ++i) {
    const Real step = spectrum.freq_grid[i] - spectrum.freq_grid[i - 1];
    if (std::abs(step - dw) > Real(1e-9) * dw) {
      throw std::invalid_argument("spatial_wavelet: frequency grid must be uniform");
    }
  }
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const Real period = two_pi / dw;
  BasicSpatialWavelet<Real> out;
  out.x.resize(n_samples);
  out.values.resize(n_samples);
  for (std::size_t m = 0; m < n_samples; ++m) {
    const Real x = (Real(m) - Real(n_samples) / Real(2)) * period / Real(n_samples);
    std::complex<Real> acc{0, 0};
    for (std::size_t j = 0; j < spectrum.freq_grid.size(); ++j) {
      if (spectrum.values[j] == Real(0)) continue;
      acc += spectrum.values[j] * std::polar(Real(1), spectrum.freq_grid[j] * x);
    }
    out.x[m] = x;
    out.values[m] = acc * (dw / two_pi);
  }
  return out;
}

}  // namespace wavesig
