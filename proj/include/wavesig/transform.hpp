#pragma once

// Complex wavelet pairings <f, kappa_{a,b}> for all positions b at each scale
// a, where kappa_{a,b}(x) = a^{-1/2} kappa((x - b)/a).
//
// The pairing is the bilinear one, integral f(x) kappa_{a,b}(x) dx, NOT a
// conjugated inner product. On the periodic unit domain with f sampled at
// x_n = n/N it is evaluated per DFT bin: with F = DFT(f) and angular
// frequencies w_k = 2 pi k,
//
//   P(a, b_m) = conj( (1/N) sum_{k=1}^{N/2-1} F_k sqrt(a) W(a w_k) e^{2 pi i k m / N} )
//
// The conjugate appears because f and the window are real: the bilinear
// pairing equals the conjugate of the one-sided correlation, and only the
// positive-frequency half of the window is nonzero (W one-sided). The window
// is evaluated analytically per bin (no interpolation of spectrum samples).
//
// direct_pairing is the validation oracle: the same quantity through an
// independent path (spatial wavelet by direct Fourier summation, then plain
// quadrature against the samples).

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fft.hpp"
#include "scales.hpp"
#include "signal.hpp"
#include "wavelet.hpp"

namespace wavesig {

// Thrown when a requested scale cannot be represented on the signal's
// discrete frequency band (entire window below bin 1 or beyond Nyquist).
class band_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Real = double>
struct BasicScaleBand {
  Real scale = Real(0);
  long k_lo = 0;            // inclusive bin range with window > 0; empty if k_lo > k_hi
  long k_hi = -1;
  bool empty = true;
  bool clipped_low = false;   // informational: support extends below bin 1
  bool clipped_high = false;  // support extends beyond bin N/2 - 1

  // A band is unusable when it holds no bin at all or loses mass past
  // Nyquist.  Low-side overhang alone is harmless on a periodic grid: the
  // band still captures every representable bin of the window.
  bool flagged() const { return empty || clipped_high; }
};
using ScaleBand = BasicScaleBand<double>;

template <class Real = double>
struct BasicBandCoverage {
  std::vector<BasicScaleBand<Real>> bands;
  bool any_empty = false;
  bool all_flagged = false;
};
using BandCoverage = BasicBandCoverage<double>;

namespace detail {

template <class Real>
const BasicWaveletSpec<Real>& require_source_spec(const BasicWaveletSpectrum<Real>& spectrum) {
  if (!spectrum.source_spec) {
    throw std::invalid_argument(
        "transform: spectrum carries no analytic window; build it with sample_spectrum");
  }
  return *spectrum.source_spec;
}

template <class Real>
BasicScaleBand<Real> scale_band(const BasicWaveletSpec<Real>& spec, Real a, std::size_t n) {
  if (!(a > Real(0)) || !std::isfinite(a)) {
    throw std::invalid_argument("transform: scale must be positive and finite");
  }
  const Real pi = std::numbers::pi_v<Real>;
  const Real two_pi = Real(2) * pi;
  const auto support = window_support(spec);
  // W(a w_k) > 0  <=>  k strictly inside (support[0], support[1]) / (2 pi a)
  const Real lo = support[0] / (two_pi * a);
  const Real hi = support[1] / (two_pi * a);
  const long k_max = static_cast<long>(n / 2) - 1;

  BasicScaleBand<Real> band;
  band.scale = a;
  band.clipped_low = lo < Real(1);
  band.clipped_high = hi > Real(k_max);

  long k_lo = std::max(1L, static_cast<long>(std::floor(lo)));
  const long scan_hi = std::min(k_max, static_cast<long>(std::ceil(hi)));
  while (k_lo <= scan_hi && !(eval_meyer_window(spec, two_pi * Real(k_lo) * a) > Real(0))) {
    ++k_lo;
  }
  long k_hi = scan_hi;
  const long scan_lo = std::max(1L, static_cast<long>(std::floor(lo)));
  while (k_hi >= scan_lo && !(eval_meyer_window(spec, two_pi * Real(k_hi) * a) > Real(0))) {
    --k_hi;
  }
  band.empty = !(k_lo <= k_hi && k_lo >= 1 && k_hi <= k_max);
  if (!band.empty) {
    band.k_lo = k_lo;
    band.k_hi = k_hi;
  }
  return band;
}

}  // namespace detail

template <class Real>
BasicBandCoverage<Real> band_coverage(const BasicWaveletSpectrum<Real>& spectrum,
                                      const BasicScaleGrid<Real>& grid, std::size_t n) {
  const auto& spec = detail::require_source_spec(spectrum);
  if (grid.scales.empty()) throw std::invalid_argument("band_coverage: empty scale grid");
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("band_coverage: signal length must be even and >= 8");
  }
  BasicBandCoverage<Real> coverage;
  coverage.bands.reserve(grid.scales.size());
  coverage.all_flagged = true;
  for (const Real a : grid.scales) {
    auto band = detail::scale_band(spec, a, n);
    coverage.any_empty = coverage.any_empty || band.empty;
    coverage.all_flagged = coverage.all_flagged && band.flagged();
    coverage.bands.push_back(std::move(band));
  }
  return coverage;
}

inline constexpr double default_magnitude_floor_ratio = 1e-12;

template <class Real = double>
struct BasicCoefficientField {
  std::vector<std::complex<Real>> values;  // row-major [scale][position]
  BasicScaleGrid<Real> scale_grid;
  std::size_t n_positions = 0;

  std::size_t n_scales() const { return scale_grid.scales.size(); }

  const std::complex<Real>& at(std::size_t scale_index, std::size_t position) const {
    return values[scale_index * n_positions + position];
  }
  std::complex<Real>& at(std::size_t scale_index, std::size_t position) {
    return values[scale_index * n_positions + position];
  }

  Real max_abs() const {
    Real best = Real(0);
    for (const auto& z : values) best = std::max(best, std::abs(z));
    return best;
  }

  // Pairings at or below this magnitude are treated as exactly zero before
  // sign extraction, so machine-epsilon residues do not contribute phases.
  Real magnitude_floor(Real ratio = Real(default_magnitude_floor_ratio)) const {
    return ratio * max_abs();
  }
};
using CoefficientField = BasicCoefficientField<double>;

template <class Real>
BasicCoefficientField<Real> cwt(const BasicSignal<Real>& f,
                                const BasicWaveletSpectrum<Real>& spectrum,
                                const BasicScaleGrid<Real>& grid) {
  validate_signal(f);
  const auto& spec = detail::require_source_spec(spectrum);
  const auto admissibility = check_admissibility(spectrum);
  if (!admissibility.pass()) {
    std::string msg = "cwt: window is not admissible:";
    for (const auto& v : admissibility.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  const std::size_t n = f.size();
  const auto coverage = band_coverage(spectrum, grid, n);
  if (coverage.any_empty) {
    for (const auto& band : coverage.bands) {
      if (band.empty) {
        throw band_error("cwt: scale " + std::to_string(double(band.scale)) +
                         " has no supported frequency bin between bin 1 and Nyquist");
      }
    }
  }
  if (coverage.all_flagged) {
    throw band_error("cwt: every scale is clipped by Nyquist");
  }

  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const auto F = fft_of_real(f.samples);

  BasicCoefficientField<Real> field;
  field.scale_grid = grid;
  field.n_positions = n;
  field.values.assign(grid.scales.size() * n, std::complex<Real>(0, 0));

  std::vector<std::complex<Real>> row(n);
  for (std::size_t j = 0; j < grid.scales.size(); ++j) {
    const Real a = grid.scales[j];
    const Real root_a = std::sqrt(a);
    const auto& band = coverage.bands[j];
    std::fill(row.begin(), row.end(), std::complex<Real>(0, 0));
    for (long k = band.k_lo; k <= band.k_hi; ++k) {
      const Real weight = root_a * eval_meyer_window(spec, two_pi * Real(k) * a);
      row[static_cast<std::size_t>(k)] = F[static_cast<std::size_t>(k)] * weight;
    }
    fft_inverse(row);
    for (std::size_t b = 0; b < n; ++b) {
      field.at(j, b) = std::conj(row[b]);
    }
  }
  return field;
}

// Validation oracle: same pairing through an independent path. The scaled
// wavelet kappa_a(y) = a^{-1/2} kappa(y/a) has spectrum sqrt(a) W(a w); it is
// sampled on the signal's own bin grid, turned into spatial samples by
// spatial_wavelet (direct summation, period exactly 1), and paired with the
// signal by plain quadrature with periodic wrap:
//   P = (1/N) sum_n f[n] kappa_a(x_n - b).
template <class Real>
std::complex<Real> direct_pairing(const BasicSignal<Real>& f,
                                  const BasicWaveletSpectrum<Real>& spectrum, Real a, Real b,
                                  std::size_t oversample = 4) {
  validate_signal(f);
  const auto& spec = detail::require_source_spec(spectrum);
  const std::size_t n = f.size();
  if (!(b >= Real(0)) || !(b < Real(1))) {
    throw std::invalid_argument("direct_pairing: position must lie in [0, 1)");
  }
  if (oversample < 1) throw std::invalid_argument("direct_pairing: oversample must be >= 1");
  const auto band = detail::scale_band(spec, a, n);
  if (band.empty) {
    throw band_error("direct_pairing: scale has no supported frequency bin");
  }

  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const Real root_a = std::sqrt(a);

  // Spectrum of the scaled wavelet on the bin grid w_k = 2 pi k, k = 0..N/2-1.
  BasicWaveletSpectrum<Real> scaled;
  scaled.freq_grid.resize(n / 2);
  scaled.values.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    scaled.freq_grid[k] = two_pi * Real(k);
    scaled.values[k] = root_a * eval_meyer_window(spec, two_pi * Real(k) * a);
  }
  scaled.support = {window_support(spec)[0] / a, window_support(spec)[1] / a};

  const std::size_t n_fine = n * oversample;
  const auto spatial = spatial_wavelet(scaled, n_fine);  // x in [-1/2, 1/2), dx = 1/n_fine

  std::complex<Real> acc{0, 0};
  for (std::size_t m = 0; m < n; ++m) {
    Real y = Real(m) / Real(n) - b;  // x_m - b, wrapped into [-1/2, 1/2)
    y -= std::floor(y + Real(0.5));
    long idx = std::lround((y + Real(0.5)) * Real(n_fine));
    idx = ((idx % static_cast<long>(n_fine)) + static_cast<long>(n_fine)) %
          static_cast<long>(n_fine);
    acc += f.samples[m] * spatial.values[static_cast<std::size_t>(idx)];
  }
  return acc / Real(n);
}

}  // namespace wavesig
