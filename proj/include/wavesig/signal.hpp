#pragma once

// A uniformly sampled real signal on the periodic unit interval:
// samples[n] = f(n/N), with f extended 1-periodically. All analysis code in
// this library treats index arithmetic modulo N; the seam at x = 0 is a real
// discontinuity of the periodic extension whenever f(0+) != f(1-), and shows
// up in results as a documented boundary feature.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavesig {

template <class Real = double>
struct BasicSignal {
  std::vector<Real> samples;
  std::string label;

  std::size_t size() const { return samples.size(); }
};
using Signal = BasicSignal<double>;

template <class Real>
void validate_signal(const BasicSignal<Real>& f) {
  if (f.samples.size() < 8 || f.samples.size() % 2 != 0) {
    throw std::invalid_argument("signal: length must be even and >= 8");
  }
  for (const Real v : f.samples) {
    if (!std::isfinite(v)) throw std::invalid_argument("signal: non-finite sample");
  }
}

}  // namespace wavesig
