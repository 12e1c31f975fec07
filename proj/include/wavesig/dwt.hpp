#pragma once

// Periodic orthonormal discrete wavelet transform with compactly supported
// Daubechies filters (order = number of vanishing moments, 2*order taps;
// published coefficient values, low-pass sums to sqrt(2)). The high-pass is
// the usual quadrature mirror g[t] = (-1)^t h[2p-1-t]. Circular (mod-n)
// convolution keeps the transform orthonormal at every dyadic level, so
// perfect reconstruction holds to machine precision.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wavesig {

namespace detail {

inline const std::vector<double>& daubechies_lowpass(int order) {
  static const std::vector<double> db1 = {
      0.7071067811865476, 0.7071067811865476};
  static const std::vector<double> db2 = {
      0.4829629131445341, 0.8365163037378079, 0.2241438680420134, -0.1294095225512604};
  static const std::vector<double> db3 = {
      0.3326705529500825, 0.8068915093110924, 0.4598775021184914,
      -0.1350110200102546, -0.0854412738820267, 0.0352262918857095};
  static const std::vector<double> db4 = {
      0.2303778133088552, 0.7148465705525415, 0.6308807679295904, -0.0279837694169839,
      -0.1870348117188811, 0.0308413818359870, 0.0328830116669829, -0.0105974017849973};
  switch (order) {
    case 1: return db1;
    case 2: return db2;
    case 3: return db3;
    case 4: return db4;
    default:
      throw std::invalid_argument("dwt: filter order must be in 1..4 (vanishing moments)");
  }
}

}  // namespace detail

template <class Real = double>
struct BasicWaveletDecomposition {
  std::vector<std::vector<Real>> details;  // details[0] = finest level
  std::vector<Real> approx;                // coarsest approximation
  int filter_order = 4;
};
using WaveletDecomposition = BasicWaveletDecomposition<double>;

inline int max_dwt_levels(std::size_t n) {
  int levels = 0;
  while (n >= 2 && n % 2 == 0) {
    n /= 2;
    ++levels;
  }
  return levels;
}

template <class Real>
BasicWaveletDecomposition<Real> dwt_forward(const std::vector<Real>& samples, int filter_order,
                                            int levels) {
  const auto& h = detail::daubechies_lowpass(filter_order);
  const std::size_t taps = h.size();
  if (levels < 1) throw std::invalid_argument("dwt: level count must be >= 1");
  if (levels > max_dwt_levels(samples.size())) {
    throw std::invalid_argument("dwt: too many levels for this signal length");
  }
  BasicWaveletDecomposition<Real> out;
  out.filter_order = filter_order;
  std::vector<Real> current = samples;
  for (int level = 0; level < levels; ++level) {
    const std::size_t n = current.size();
    const std::size_t half = n / 2;
    std::vector<Real> approx(half, Real(0));
    std::vector<Real> detail_row(half, Real(0));
    for (std::size_t i = 0; i < half; ++i) {
      Real s = Real(0);
      Real d = Real(0);
      for (std::size_t t = 0; t < taps; ++t) {
        const Real x = current[(2 * i + t) % n];
        const Real hp = (t % 2 == 0 ? Real(1) : Real(-1)) * Real(h[taps - 1 - t]);
        s += Real(h[t]) * x;
        d += hp * x;
      }
      approx[i] = s;
      detail_row[i] = d;
    }
    out.details.push_back(std::move(detail_row));
    current = std::move(approx);
  }
  out.approx = std::move(current);
  return out;
}

template <class Real>
std::vector<Real> dwt_inverse(const BasicWaveletDecomposition<Real>& decomposition) {
  const auto& h = detail::daubechies_lowpass(decomposition.filter_order);
  const std::size_t taps = h.size();
  std::vector<Real> current = decomposition.approx;
  for (std::size_t level = decomposition.details.size(); level-- > 0;) {
    const auto& detail_row = decomposition.details[level];
    if (detail_row.size() != current.size()) {
      throw std::invalid_argument("dwt: inconsistent decomposition level sizes");
    }
    const std::size_t n = 2 * current.size();
    std::vector<Real> next(n, Real(0));
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t t = 0; t < taps; ++t) {
        const Real hp = (t % 2 == 0 ? Real(1) : Real(-1)) * Real(h[taps - 1 - t]);
        next[(2 * i + t) % n] += Real(h[t]) * current[i] + hp * detail_row[i];
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace wavesig
