#pragma once

// Spectral multiplier operators on periodic signals, acting through the DFT.
//
//   frac_laplacian(f, r):  bin k != 0 multiplied by |2 pi k|^r (signed
//       frequency magnitude), bin 0 zeroed for every r. Constants are
//       invisible to a one-sided compactly supported analyzing window, so
//       zeroing DC is signature-neutral and keeps r < 0 well defined.
//   frac_hilbert(f, alpha): bin k multiplied by e^{-i alpha pi/2 sgn k};
//       DC and the Nyquist bin (where sgn is ambiguous) are multiplied by
//       cos(alpha pi/2), the Hermitian-consistent real choice.
//   translate(f, shift):   circular shift; exact sample rotation for
//       integer-sample shifts, spectral phase ramp otherwise.
//   dilate(f, factor):     band-limited resampling of f(x / factor) on the
//       same grid; features move from b to factor * b (mod periodization).
//
// All multipliers are Hermitian-symmetric, so real signals map to real
// signals up to rounding; imaginary residue is discarded after the
// construction guarantees it is at machine-epsilon level.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fft.hpp"
#include "signal.hpp"

namespace wavesig {

enum class OperatorKind { fractional_laplacian, fractional_hilbert, translate, dilate };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::fractional_laplacian;
  double order = 0.0;   // r for the Laplacian, alpha for the Hilbert transform
  double shift = 0.0;   // translate only
  double factor = 1.0;  // dilate only, > 0
};

namespace detail {

template <class Real>
BasicSignal<Real> from_spectrum(std::vector<std::complex<Real>>& spectrum,
                                const std::string& label) {
  fft_inverse(spectrum);
  BasicSignal<Real> out;
  out.label = label;
  out.samples.resize(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) out.samples[i] = spectrum[i].real();
  return out;
}

}  // namespace detail

template <class Real>
BasicSignal<Real> frac_laplacian(const BasicSignal<Real>& f, Real order) {
  validate_signal(f);
  if (!std::isfinite(order)) throw std::invalid_argument("frac_laplacian: non-finite order");
  const std::size_t n = f.size();
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  auto spectrum = fft_of_real(f.samples);
  spectrum[0] = std::complex<Real>(0, 0);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t freq = std::min(k, n - k);  // signed frequency magnitude
    spectrum[k] *= std::pow(two_pi * Real(freq), order);
  }
  return detail::from_spectrum(spectrum, f.label);
}

template <class Real>
BasicSignal<Real> frac_hilbert(const BasicSignal<Real>& f, Real alpha) {
  validate_signal(f);
  if (!std::isfinite(alpha)) throw std::invalid_argument("frac_hilbert: non-finite order");
  const std::size_t n = f.size();
  const Real half_pi = std::numbers::pi_v<Real> / Real(2);
  auto spectrum = fft_of_real(f.samples);
  const std::complex<Real> positive = std::polar(Real(1), -alpha * half_pi);
  const std::complex<Real> negative = std::conj(positive);
  const Real ambiguous = std::cos(alpha * half_pi);
  spectrum[0] *= ambiguous;
  spectrum[n / 2] *= ambiguous;
  for (std::size_t k = 1; k < n / 2; ++k) {
    spectrum[k] *= positive;
    spectrum[n - k] *= negative;
  }
  return detail::from_spectrum(spectrum, f.label);
}

template <class Real>
BasicSignal<Real> translate(const BasicSignal<Real>& f, Real shift) {
  validate_signal(f);
  if (!std::isfinite(shift)) throw std::invalid_argument("translate: non-finite shift");
  const std::size_t n = f.size();
  const Real samples_shift = shift * Real(n);
  const Real rounded = std::round(samples_shift);
  if (std::abs(samples_shift - rounded) <= Real(1e-9)) {
    // Integer-sample shift: exact rotation, out[m] = f[m - shift].
    const long m0 = static_cast<long>(rounded);
    BasicSignal<Real> out;
    out.label = f.label;
    out.samples.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
      const long src = ((static_cast<long>(m) - m0) % static_cast<long>(n) +
                        static_cast<long>(n)) % static_cast<long>(n);
      out.samples[m] = f.samples[static_cast<std::size_t>(src)];
    }
    return out;
  }
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  auto spectrum = fft_of_real(f.samples);
  for (std::size_t k = 1; k < n / 2; ++k) {
    const std::complex<Real> ramp = std::polar(Real(1), -two_pi * Real(k) * shift);
    spectrum[k] *= ramp;
    spectrum[n - k] *= std::conj(ramp);
  }
  spectrum[n / 2] *= std::cos(std::numbers::pi_v<Real> * Real(n) * shift);
  return detail::from_spectrum(spectrum, f.label);
}

template <class Real>
BasicSignal<Real> dilate(const BasicSignal<Real>& f, Real factor) {
  validate_signal(f);
  if (!(factor > Real(0)) || !std::isfinite(factor)) {
    throw std::invalid_argument("dilate: factor must be positive and finite");
  }
  const std::size_t n = f.size();
  if (factor >= Real(n)) {
    // Even a feature at the first interior grid point x = 1/N would land at
    // factor/N >= 1, outside the visible domain.
    throw std::invalid_argument("dilate: factor moves every representable feature out of [0, 1)");
  }
  const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
  const auto spectrum = fft_of_real(f.samples);
  const Real inv_root = Real(1) / std::sqrt(factor);

  BasicSignal<Real> out;
  out.label = f.label;
  out.samples.resize(n);
  // Evaluate the trigonometric interpolant of f at x/factor (periodic), in
  // the real cos/sin form so the result is exactly real.
  for (std::size_t m = 0; m < n; ++m) {
    Real x = (Real(m) / Real(n)) / factor;
    x -= std::floor(x);  // periodic extension of the interpolant
    Real acc = spectrum[0].real();
    for (std::size_t k = 1; k < n / 2; ++k) {
      const Real phase = two_pi * Real(k) * x;
      acc += Real(2) * (spectrum[k].real() * std::cos(phase) -
                        spectrum[k].imag() * std::sin(phase));
    }
    acc += spectrum[n / 2].real() * std::cos(std::numbers::pi_v<Real> * Real(n) * x);
    out.samples[m] = inv_root * acc / Real(n);
  }
  return out;
}

template <class Real>
BasicSignal<Real> apply_operator(const BasicSignal<Real>& f, const OperatorSpec& op) {
  switch (op.kind) {
    case OperatorKind::fractional_laplacian: return frac_laplacian(f, Real(op.order));
    case OperatorKind::fractional_hilbert: return frac_hilbert(f, Real(op.order));
    case OperatorKind::translate: return translate(f, Real(op.shift));
    case OperatorKind::dilate: return dilate(f, Real(op.factor));
  }
  throw std::invalid_argument("apply_operator: unknown operator kind");
}

}  // namespace wavesig
