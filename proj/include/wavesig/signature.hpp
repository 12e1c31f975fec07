#pragma once

// Pointwise statistics of the pairing signs across scales.
//
// At each position b the per-scale complex signs sgn P(a_j, b) are averaged
// into the mean resultant vector
//
//   w_b = (1/J) sum_j sgn P(a_j, b),        rho_b = 1 - |w_b|,
//
// and a position is classified as a feature when the signs cohere strongly
// enough across scales: sigma(b) = sgn w_b if |w_b| > tau, else 0. The
// argument of sigma then separates feature types: +-pi/2 for jumps (up/down),
// pi or 0 for cusps (V-shaped / cap-shaped). sgn z is z/|z| for z != 0 and 0
// for z = 0; a magnitude floor keeps machine-epsilon pairings from
// contributing noise phases, and zero signs still count in the denominator J
// (conservative detection).

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "transform.hpp"

namespace wavesig {

inline constexpr double default_detection_threshold = std::numbers::sqrt2 / 2.0;

template <class Real>
std::complex<Real> complex_sign(std::complex<Real> z, Real floor = Real(0)) {
  if (floor < Real(0)) throw std::invalid_argument("complex_sign: floor must be >= 0");
  const Real magnitude = std::abs(z);
  if (!(magnitude > floor)) return std::complex<Real>(0, 0);
  return z / magnitude;
}

template <class Real>
std::vector<std::complex<Real>> mean_resultant(const BasicCoefficientField<Real>& field,
                                               Real floor) {
  const std::size_t n_scales = field.n_scales();
  if (n_scales < 1) throw std::invalid_argument("mean_resultant: field has no scales");
  std::vector<std::complex<Real>> w(field.n_positions);
  for (std::size_t b = 0; b < field.n_positions; ++b) {
    std::complex<Real> acc{0, 0};
    for (std::size_t j = 0; j < n_scales; ++j) {
      acc += complex_sign(field.at(j, b), floor);
    }
    w[b] = acc / Real(n_scales);
  }
  return w;
}

template <class Real>
std::vector<std::complex<Real>> mean_resultant(const BasicCoefficientField<Real>& field) {
  return mean_resultant(field, field.magnitude_floor());
}

template <class Real = double>
struct BasicSignatureField {
  std::vector<std::complex<Real>> w_mean;   // mean resultant vector per position
  std::vector<Real> abs_w;                  // |w_b|
  std::vector<Real> rho;                    // directional variance 1 - |w_b|
  std::vector<std::complex<Real>> sigma;    // classified signature (unit modulus or 0)
  std::vector<Real> arg_sigma;              // arg sigma in (-pi, pi]; 0 where sigma = 0
  std::vector<std::size_t> detected;        // positions with sigma != 0
  Real tau = Real(default_detection_threshold);
};
using SignatureField = BasicSignatureField<double>;

template <class Real>
BasicSignatureField<Real> classify(const std::vector<std::complex<Real>>& w_mean,
                                   Real tau = Real(default_detection_threshold)) {
  if (!(tau > Real(0)) || !(tau < Real(1))) {
    throw std::invalid_argument("classify: threshold must lie strictly inside (0, 1)");
  }
  BasicSignatureField<Real> field;
  field.tau = tau;
  field.w_mean = w_mean;
  field.abs_w.resize(w_mean.size());
  field.rho.resize(w_mean.size());
  field.sigma.assign(w_mean.size(), std::complex<Real>(0, 0));
  field.arg_sigma.assign(w_mean.size(), Real(0));
  for (std::size_t b = 0; b < w_mean.size(); ++b) {
    const Real r = std::abs(w_mean[b]);
    field.abs_w[b] = r;
    field.rho[b] = Real(1) - r;
    if (r > tau) {  // strict: a tie at tau stays unclassified
      field.sigma[b] = w_mean[b] / r;
      field.arg_sigma[b] = std::arg(field.sigma[b]);
      field.detected.push_back(b);
    }
  }
  return field;
}

// Running means (1/n) sum_{j<=n} sgn P(a_j, b) for n = 1..J: lets a caller
// inspect whether the sign sequence at b is settling toward a limit as the
// scale index grows (means of convergent sequences converge to the same
// limit, so a drifting tail shows up directly).
template <class Real>
std::vector<std::complex<Real>> cesaro_diagnostic(const BasicCoefficientField<Real>& field,
                                                  std::size_t b, Real floor) {
  if (b >= field.n_positions) throw std::invalid_argument("cesaro_diagnostic: position out of range");
  std::vector<std::complex<Real>> partial(field.n_scales());
  std::complex<Real> acc{0, 0};
  for (std::size_t j = 0; j < field.n_scales(); ++j) {
    acc += complex_sign(field.at(j, b), floor);
    partial[j] = acc / Real(j + 1);
  }
  return partial;
}

template <class Real>
std::vector<std::complex<Real>> cesaro_diagnostic(const BasicCoefficientField<Real>& field,
                                                  std::size_t b) {
  return cesaro_diagnostic(field, b, field.magnitude_floor());
}

enum class FeatureLabel { step_up, step_down, cusp_down, cusp_up };

inline const char* to_string(FeatureLabel label) {
  switch (label) {
    case FeatureLabel::step_up: return "step-up";
    case FeatureLabel::step_down: return "step-down";
    case FeatureLabel::cusp_down: return "cusp-down";
    case FeatureLabel::cusp_up: return "cusp-up";
  }
  return "unknown";
}

template <class Real = double>
struct BasicLabelMatch {
  FeatureLabel label;
  Real distance;  // angular distance to the matched anchor, radians
};
using LabelMatch = BasicLabelMatch<double>;

// Nearest of the four canonical signature angles. Anchors: step-up +pi/2,
// step-down -pi/2, cusp-down 0 (signature +1, cap-shaped -|x|^g), cusp-up pi
// (signature -1, V-shaped |x|^g). Exact ties prefer the step interpretation
// (anchors are scanned in the order above and only a strictly smaller
// distance replaces the current best).
template <class Real>
BasicLabelMatch<Real> symmetry_label(std::complex<Real> sigma) {
  if (sigma == std::complex<Real>(0, 0)) {
    throw std::invalid_argument("symmetry_label: signature is zero (no feature)");
  }
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real theta = std::arg(sigma);
  const struct {
    FeatureLabel label;
    Real anchor;
  } anchors[] = {
      {FeatureLabel::step_up, pi / 2},
      {FeatureLabel::step_down, -pi / 2},
      {FeatureLabel::cusp_down, Real(0)},
      {FeatureLabel::cusp_up, pi},
  };
  BasicLabelMatch<Real> best{FeatureLabel::step_up, Real(1e30)};
  for (const auto& candidate : anchors) {
    const Real distance = std::abs(std::remainder(theta - candidate.anchor, Real(2) * pi));
    if (distance < best.distance) {
      best.label = candidate.label;
      best.distance = distance;
    }
  }
  return best;
}

// Optional post-filter: keep only local maxima of |w_b| within a circular
// +-window neighbourhood among the detected positions; everything else is
// demoted to sigma = 0. Plateaus of exactly equal |w_b| are all kept.
template <class Real>
void apply_nms(BasicSignatureField<Real>& field, int window) {
  if (window < 1) throw std::invalid_argument("apply_nms: window must be >= 1");
  const long n = static_cast<long>(field.abs_w.size());
  if (n == 0) return;
  std::vector<std::size_t> kept;
  kept.reserve(field.detected.size());
  for (const std::size_t b : field.detected) {
    bool is_max = true;
    for (long d = -window; d <= window && is_max; ++d) {
      if (d == 0) continue;
      const std::size_t neighbour =
          static_cast<std::size_t>(((static_cast<long>(b) + d) % n + n) % n);
      if (field.abs_w[neighbour] > field.abs_w[b]) is_max = false;
    }
    if (is_max) {
      kept.push_back(b);
    } else {
      field.sigma[b] = std::complex<Real>(0, 0);
      field.arg_sigma[b] = Real(0);
    }
  }
  field.detected = std::move(kept);
}

}  // namespace wavesig
