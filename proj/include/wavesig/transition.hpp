#pragma once

// Polynomial smoothstep profiles g : R -> [0, 1] used to round the corners of
// the analyzing window. Every profile satisfies
//
//   g(xi) = 0 for xi <= 0,   g(xi) = 1 for xi >= 1,   g(xi) + g(1 - xi) = 1,
//
// is nondecreasing, and has `smoothness_order` continuous derivatives at the
// endpoints. These are the classic smoothstep polynomials S_n; n = 1 is the
// cubic xi^2 (3 - 2 xi) and n = 3 is xi^4 (35 - 84 xi + 70 xi^2 - 20 xi^3).

#include <cmath>
#include <stdexcept>

namespace wavesig {

struct TransitionProfile {
  int smoothness_order = 1;  // supported: 1..8
};

namespace detail {

inline double binomial(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc = acc * double(n - k + i) / double(i);
  return acc;
}

}  // namespace detail

template <class Real = double>
Real eval_transition(const TransitionProfile& profile, Real xi) {
  const int n = profile.smoothness_order;
  if (n < 1 || n > 8) {
    throw std::invalid_argument("transition profile: smoothness_order must be in 1..8");
  }
  if (std::isnan(xi)) throw std::invalid_argument("transition profile: NaN argument");
  if (xi <= Real(0)) return Real(0);
  if (xi >= Real(1)) return Real(1);
  // S_n(xi) = xi^{n+1} sum_{k=0}^{n} C(n+k, k) C(2n+1, n-k) (-xi)^k
  Real sum = Real(0);
  Real xik = Real(1);
  for (int k = 0; k <= n; ++k) {
    const Real term = Real(detail::binomial(n + k, k) * detail::binomial(2 * n + 1, n - k));
    sum += (k % 2 == 0 ? term : -term) * xik;
    xik *= xi;
  }
  return Real(std::pow(xi, Real(n + 1))) * sum;
}

}  // namespace wavesig
