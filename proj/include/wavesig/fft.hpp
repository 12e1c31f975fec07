#pragma once

// Minimal complex FFT with the conventions used throughout this library:
//   forward   F_k = sum_n f_n e^{-2 pi i k n / N}        (no scaling)
//   inverse   f_n = (1/N) sum_k F_k e^{+2 pi i k n / N}
// Power-of-two sizes take the iterative radix-2 path; other sizes fall back
// to a direct O(N^2) evaluation, which is plenty for the sizes this library
// is used at (analysis windows recommend powers of two anyway).

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wavesig {

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

template <class Real>
void radix2_transform(std::vector<std::complex<Real>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const Real ang = Real(sign) * Real(2) * std::numbers::pi_v<Real> / Real(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        // Twiddles from polar() each time: slower than a recurrence but free of
        // accumulated rounding, which the transform-vs-quadrature oracle test
        // is sensitive to.
        const std::complex<Real> w = std::polar(Real(1), ang * Real(j));
        const std::complex<Real> u = a[i + j];
        const std::complex<Real> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

template <class Real>
void direct_transform(std::vector<std::complex<Real>>& a, int sign) {
  const std::size_t n = a.size();
  const Real base = Real(sign) * Real(2) * std::numbers::pi_v<Real> / Real(n);
  std::vector<std::complex<Real>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<Real> acc{0, 0};
    for (std::size_t m = 0; m < n; ++m) {
      acc += a[m] * std::polar(Real(1), base * Real((k * m) % n));
    }
    out[k] = acc;
  }
  a = std::move(out);
}

template <class Real>
void fourier_transform(std::vector<std::complex<Real>>& a, int sign) {
  if (a.empty()) throw std::invalid_argument("fft: empty input");
  if (is_power_of_two(a.size())) {
    radix2_transform(a, sign);
  } else {
    direct_transform(a, sign);
  }
}

}  // namespace detail

template <class Real>
void fft_forward(std::vector<std::complex<Real>>& a) {
  detail::fourier_transform(a, -1);
}

template <class Real>
void fft_inverse(std::vector<std::complex<Real>>& a) {
  detail::fourier_transform(a, +1);
  const Real scale = Real(1) / Real(a.size());
  for (auto& z : a) z *= scale;
}

template <class Real>
std::vector<std::complex<Real>> fft_of_real(const std::vector<Real>& f) {
  std::vector<std::complex<Real>> a(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) a[i] = std::complex<Real>(f[i], Real(0));
  fft_forward(a);
  return a;
}

}  // namespace wavesig
