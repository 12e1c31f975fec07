#pragma once

// Synthetic reference signals with known signature behaviour, and the
// sign-randomization operator used to show that coherent wavelet phases (not
// coefficient magnitudes) carry the feature information.
//
// Sampling conventions:
//   - Signals live on [0, 1) and are treated as 1-periodic. Formulas from the
//     real line are placed with their feature at b0; the periodic seam at
//     x = 0 then carries at most one extra, documented feature.
//   - Feature positions snap to the nearest grid point, so symmetric features
//     are symmetric on the grid (this is what makes jump signatures land
//     exactly on the imaginary axis and cusp signatures exactly on the real
//     axis).
//   - Any sample lying exactly at a jump of the periodic extension takes the
//     midpoint of the one-sided limits (Dirichlet convention). This includes
//     the seam sample. Without it, the jump's odd symmetry is broken by a
//     half-sample delta whose flat spectrum tilts the fine-scale phases.
//   - Cusps use the periodic chordal distance |sin(pi u)| / pi, which matches
//     |u| to second order at the feature and is analytic everywhere else; the
//     naive wrapped distance |u| would plant a second kink at the antipode
//     whose far-field at the feature decays like the cusp's own fine-scale
//     pairing, drowning weak cusps (gamma > 2).
//   - linear_ramp and step_plus_cusp realize a SINGLE jump as a detrended
//     periodized step (sawtooth): the unit jump at b0 plus a linear ramp that
//     absorbs it at the seam. Unlike the two-jump square step, the sawtooth
//     keeps every harmonic alive and is exactly odd about b0, so the jump's
//     per-scale pairing signs are +-i to machine precision at every scale.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwt.hpp"
#include "fft.hpp"
#include "signal.hpp"

namespace wavesig {

enum class SignalKind {
  step,
  cusp,
  polynomial,
  gaussian,
  cosine,
  weierstrass,
  piecewise_demo,
  step_plus_cusp,
  linear_ramp,
};

template <class Real = double>
struct BasicGeneratorSpec {
  SignalKind kind = SignalKind::step;
  std::size_t n = 1024;
  Real position = Real(0.5);  // b0 in [0, 1); linear_ramp snaps it to the jump (0 = seam)
  Real exponent = Real(0.5);  // cusp gamma > 0
  int orientation = +1;       // step: +1 jumps up; cusp: +1 opens upward (V);
                              // linear_ramp: +1 rises (jump down at b0)
  std::vector<Real> coefficients{Real(0.1), Real(1.2), Real(-1.8), Real(0.7)};  // ascending
  long frequency = 5;         // cosine cycles per domain
  Real gaussian_std = Real(0.05);
  Real weierstrass_ratio = Real(0.35);  // r in (0, 1)
  Real weierstrass_base = Real(9);      // t, with r * t >= 1
  int weierstrass_terms = 32;
};
using GeneratorSpec = BasicGeneratorSpec<double>;

// Offsets (relative to b0, mod 1) of the secondary features in piecewise_demo.
inline constexpr double piecewise_cusp_offset = 0.25;
inline constexpr double piecewise_second_step_offset = 0.4375;

// Amplitude of the cusp term in step_plus_cusp. The jump dominates the
// signature only asymptotically; on a finite scale grid the coarsest scales
// still see the cusp, which tilts arg w away from +i in proportion to the
// cusp amplitude. The amplitude is chosen so the residual tilt stays well
// inside the 0.05 rad band around +i on the default 16-scale grid.
inline constexpr double step_plus_cusp_amplitude = 0.15;

namespace detail {

template <class Real>
std::size_t snapped_index(Real position, std::size_t n, const char* what) {
  if (!(position >= Real(0)) || !(position < Real(1))) {
    throw std::invalid_argument(std::string(what) + ": position must lie in [0, 1)");
  }
  const long idx = std::lround(double(position) * double(n)) % static_cast<long>(n);
  return static_cast<std::size_t>(idx);
}

template <class Real>
std::size_t interior_feature_index(Real position, std::size_t n, const char* what) {
  const std::size_t idx = snapped_index(position, n, what);
  if (idx == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": feature position must be strictly interior (not the seam)");
  }
  return idx;
}

// Periodic unit step with jump up at index jump_idx: 0 before, 1 after, and
// the midpoint value 1/2 at both discontinuities of the periodic extension
// (the jump sample and the seam sample).
template <class Real>
Real periodic_step_sample(std::size_t m, std::size_t jump_idx) {
  if (m == 0 || m == jump_idx) return Real(0.5);
  return m < jump_idx ? Real(0) : Real(1);
}

// Detrended periodized unit step (sawtooth): a single unit jump UP at
// jump_idx, linear with slope -1 elsewhere, continuous across the seam,
// exactly odd about the jump, midpoint value 0 at the jump sample.
template <class Real>
Real sawtooth_step_sample(std::size_t m, std::size_t jump_idx, std::size_t n) {
  if (m == jump_idx) return Real(0);
  const std::size_t offset = (m + n - jump_idx) % n;  // samples past the jump
  return Real(0.5) - Real(offset) / Real(n);
}

// Periodic chordal distance to center (both in domain units): equals the
// wrapped distance to second order near center and is analytic elsewhere.
template <class Real>
Real periodic_distance(Real x, Real center) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  return std::abs(std::sin(pi * (x - center))) / pi;
}

}  // namespace detail

template <class Real>
BasicSignal<Real> generate(const BasicGeneratorSpec<Real>& spec) {
  const std::size_t n = spec.n;
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("generate: length must be even and >= 8");
  }
  BasicSignal<Real> out;
  out.samples.resize(n);
  const auto x_of = [n](std::size_t m) { return Real(m) / Real(n); };

  switch (spec.kind) {
    case SignalKind::step: {
      const std::size_t jump = detail::interior_feature_index(spec.position, n, "step");
      for (std::size_t m = 0; m < n; ++m) {
        const Real up = detail::periodic_step_sample<Real>(m, jump);
        out.samples[m] = spec.orientation >= 0 ? up : Real(1) - up;
      }
      out.label = spec.orientation >= 0 ? "step-up" : "step-down";
      break;
    }
    case SignalKind::cusp: {
      if (!(spec.exponent > Real(0))) throw std::invalid_argument("cusp: exponent must be > 0");
      const std::size_t idx = detail::interior_feature_index(spec.position, n, "cusp");
      const Real b0 = Real(idx) / Real(n);
      const Real sign = spec.orientation >= 0 ? Real(1) : Real(-1);
      for (std::size_t m = 0; m < n; ++m) {
        out.samples[m] = sign * std::pow(detail::periodic_distance(x_of(m), b0), spec.exponent);
      }
      out.label = spec.orientation >= 0 ? "cusp-up" : "cusp-down";
      break;
    }
    case SignalKind::polynomial: {
      if (spec.coefficients.empty()) {
        throw std::invalid_argument("polynomial: need at least one coefficient");
      }
      for (std::size_t m = 0; m < n; ++m) {
        const Real x = x_of(m);
        Real acc = Real(0);
        for (std::size_t c = spec.coefficients.size(); c-- > 0;) {
          acc = acc * x + spec.coefficients[c];
        }
        out.samples[m] = acc;
      }
      out.label = "polynomial";
      break;
    }
    case SignalKind::gaussian: {
      if (!(spec.gaussian_std > Real(0))) {
        throw std::invalid_argument("gaussian: std must be > 0");
      }
      const std::size_t idx = detail::interior_feature_index(spec.position, n, "gaussian");
      const Real b0 = Real(idx) / Real(n);
      const Real inv = Real(1) / (Real(2) * spec.gaussian_std * spec.gaussian_std);
      for (std::size_t m = 0; m < n; ++m) {
        const Real d = x_of(m) - b0;
        out.samples[m] = std::exp(-inv * d * d);
      }
      out.label = "gaussian";
      break;
    }
    case SignalKind::cosine: {
      if (spec.frequency < 1 || static_cast<std::size_t>(spec.frequency) >= n / 2) {
        throw std::invalid_argument("cosine: frequency must be in [1, N/2)");
      }
      const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
      for (std::size_t m = 0; m < n; ++m) {
        out.samples[m] = std::cos(two_pi * Real(spec.frequency) * x_of(m));
      }
      out.label = "cosine";
      break;
    }
    case SignalKind::weierstrass: {
      const Real r = spec.weierstrass_ratio;
      const Real t = spec.weierstrass_base;
      if (!(r > Real(0)) || !(r < Real(1)) || !(r * t >= Real(1))) {
        throw std::invalid_argument("weierstrass: need 0 < r < 1 and r*t >= 1");
      }
      if (spec.weierstrass_terms < 1) {
        throw std::invalid_argument("weierstrass: need at least one term");
      }
      // sum r^i cos(t^i x) with the formula's x in [-1, 1] mapped onto [0, 1).
      for (std::size_t m = 0; m < n; ++m) {
        const Real x = Real(2) * x_of(m) - Real(1);
        Real acc = Real(0);
        Real ri = Real(1);
        Real ti = Real(1);
        for (int i = 0; i < spec.weierstrass_terms; ++i) {
          acc += ri * std::cos(ti * x);
          ri *= r;
          ti *= t;
        }
        out.samples[m] = acc;
      }
      out.label = "weierstrass";
      break;
    }
    case SignalKind::piecewise_demo: {
      // Two jumps, one cusp, and a smooth arc: primary step-up at b0, a
      // V-shaped cusp at b0 + piecewise_cusp_offset, a step-down at
      // b0 + piecewise_second_step_offset (all mod 1), over the arc
      // q(x) = 0.2 + 0.6 x (1 - x).
      const std::size_t jump1 = detail::interior_feature_index(spec.position, n, "piecewise_demo");
      const std::size_t cusp_idx = detail::interior_feature_index(
          std::fmod(spec.position + Real(piecewise_cusp_offset), Real(1)), n, "piecewise_demo");
      const std::size_t jump2 = detail::interior_feature_index(
          std::fmod(spec.position + Real(piecewise_second_step_offset), Real(1)), n,
          "piecewise_demo");
      const Real cusp_pos = Real(cusp_idx) / Real(n);
      for (std::size_t m = 0; m < n; ++m) {
        const Real x = x_of(m);
        Real acc = Real(0.2) + Real(0.6) * x * (Real(1) - x);
        acc += Real(0.4) * detail::periodic_step_sample<Real>(m, jump1);
        acc -= Real(0.3) * detail::periodic_step_sample<Real>(m, jump2);
        acc += Real(1.0) * std::pow(detail::periodic_distance(x, cusp_pos), Real(0.5));
        out.samples[m] = acc;
      }
      out.label = "piecewise_demo";
      break;
    }
    case SignalKind::step_plus_cusp: {
      // Single-jump (detrended) step plus a V-shaped cusp, both at b0: the
      // sawtooth realization keeps every jump pairing exactly on the +i axis,
      // so the only deviation from +i is the cusp's own contribution.
      if (!(spec.exponent > Real(0))) {
        throw std::invalid_argument("step_plus_cusp: exponent must be > 0");
      }
      const std::size_t idx = detail::interior_feature_index(spec.position, n, "step_plus_cusp");
      const Real b0 = Real(idx) / Real(n);
      for (std::size_t m = 0; m < n; ++m) {
        out.samples[m] =
            detail::sawtooth_step_sample<Real>(m, idx, n) +
            Real(step_plus_cusp_amplitude) *
                std::pow(detail::periodic_distance(x_of(m), b0), spec.exponent);
      }
      out.label = "step_plus_cusp";
      break;
    }
    case SignalKind::linear_ramp: {
      // Sawtooth: unit jump at the (snapped) position, linear elsewhere.
      // orientation +1 keeps the classic rising ramp f = x (jump DOWN at the
      // position, which defaults to the seam); -1 negates it (jump UP).
      const std::size_t idx = detail::snapped_index(spec.position, n, "linear_ramp");
      const Real sign = spec.orientation >= 0 ? Real(-1) : Real(1);
      for (std::size_t m = 0; m < n; ++m) {
        out.samples[m] = sign * detail::sawtooth_step_sample<Real>(m, idx, n) + Real(0.5);
      }
      out.label = "linear_ramp";
      break;
    }
  }
  validate_signal(out);
  return out;
}

// Positions (snapped) of the true features of a generated signal, excluding
// the periodization seam. Empty for signals without localized features.
template <class Real>
std::vector<Real> feature_positions(const BasicGeneratorSpec<Real>& spec) {
  const auto snap = [&spec](Real p) {
    return Real(detail::snapped_index(std::fmod(p, Real(1)), spec.n, "feature_positions")) /
           Real(spec.n);
  };
  switch (spec.kind) {
    case SignalKind::step:
    case SignalKind::cusp:
    case SignalKind::gaussian:
    case SignalKind::step_plus_cusp:
    case SignalKind::linear_ramp:
      return {snap(spec.position)};
    case SignalKind::piecewise_demo:
      return {snap(spec.position), snap(spec.position + Real(piecewise_cusp_offset)),
              snap(spec.position + Real(piecewise_second_step_offset))};
    default:
      return {};
  }
}

template <class Real = double>
struct BasicCatalogEntry {
  std::string name;  // equals the generated signal's label
  BasicGeneratorSpec<Real> spec;
  std::complex<Real> expected_at_feature;  // 0 means "no detection expected anywhere"
  Real feature_position = Real(0);         // where expected_at_feature applies
  std::vector<Real> documented_extras;     // seam / secondary features excluded from
                                           // the "no detection elsewhere" requirement
  Real analysis_dilation = Real(1);        // window dilation the expectation assumes
  int detection_radius = 16;               // samples around the feature where detections
                                           // may legitimately cluster (wide for smooth bumps)
  Real angle_tolerance = Real(0.05);       // allowed |arg sigma - arg expected| at the feature
};
using CatalogEntry = BasicCatalogEntry<double>;

// Reference signals with their expected discrete signatures: the value at the
// feature position, and zero everywhere else except the documented extras.
template <class Real = double>
std::vector<BasicCatalogEntry<Real>> catalog() {
  std::vector<BasicCatalogEntry<Real>> entries;
  const std::complex<Real> i{0, 1};
  const auto add = [&entries](const char* name, BasicGeneratorSpec<Real> spec,
                              std::complex<Real> expected, std::vector<Real> extras) {
    BasicCatalogEntry<Real> entry;
    entry.name = name;
    entry.feature_position = spec.position;
    entry.spec = std::move(spec);
    entry.expected_at_feature = expected;
    entry.documented_extras = std::move(extras);
    entries.push_back(std::move(entry));
  };

  BasicGeneratorSpec<Real> step_up;
  step_up.kind = SignalKind::step;
  add("step-up", step_up, i, {Real(0)});

  BasicGeneratorSpec<Real> step_down = step_up;
  step_down.orientation = -1;
  add("step-down", step_down, -i, {Real(0)});

  BasicGeneratorSpec<Real> cusp_up;
  cusp_up.kind = SignalKind::cusp;
  cusp_up.exponent = Real(0.5);
  add("cusp-up", cusp_up, std::complex<Real>(-1, 0), {});

  BasicGeneratorSpec<Real> cusp_down = cusp_up;
  cusp_down.orientation = -1;
  add("cusp-down", cusp_down, std::complex<Real>(1, 0), {});

  BasicGeneratorSpec<Real> polynomial;
  polynomial.kind = SignalKind::polynomial;
  add("polynomial", polynomial, std::complex<Real>(0, 0), {Real(0)});

  BasicGeneratorSpec<Real> cosine;
  cosine.kind = SignalKind::cosine;
  add("cosine", cosine, std::complex<Real>(0, 0), {});

  BasicGeneratorSpec<Real> gaussian;
  gaussian.kind = SignalKind::gaussian;
  add("gaussian", gaussian, std::complex<Real>(1, 0), {});
  entries.back().detection_radius = 48;  // smooth bump: the signature peak is as
                                         // wide as the bump, not sample-sharp

  BasicGeneratorSpec<Real> step_cusp;
  step_cusp.kind = SignalKind::step_plus_cusp;
  add("step_plus_cusp", step_cusp, i, {});

  BasicGeneratorSpec<Real> piecewise;
  piecewise.kind = SignalKind::piecewise_demo;
  piecewise.position = Real(0.25);
  add("piecewise_demo", piecewise, i,
      {Real(0), Real(0.25) + Real(piecewise_cusp_offset),
       Real(0.25) + Real(piecewise_second_step_offset)});
  entries.back().angle_tolerance = Real(0.5);  // composite signal: coarse scales see
                                               // several features at once, tilting each
                                               // angle by up to ~0.4 rad; 0.5 still pins
                                               // the class (label boundary is pi/4 ~ 0.79)

  return entries;
}

struct PerturbationSpec {
  std::uint64_t seed = 1;
  int dwt_levels = 0;  // 0 = every available dyadic level
  int filter_order = 4;
};

// Per-level sorted detail-coefficient moduli of the decomposition the
// perturbation actually flipped, captured immediately before and after the
// sign multiplication. Because |+-1 * d| = |d| holds exactly in floating
// point, moduli_preserved() is a bitwise statement about the operator itself,
// independent of the (rounded) reconstruction that follows.
template <class Real = double>
struct BasicPerturbationTrace {
  std::vector<std::vector<Real>> moduli_before;  // finest level first, each sorted ascending
  std::vector<std::vector<Real>> moduli_after;

  bool moduli_preserved() const { return moduli_before == moduli_after; }
};
using PerturbationTrace = BasicPerturbationTrace<double>;

namespace detail {

template <class Real>
std::vector<std::vector<Real>> sorted_detail_moduli(
    const BasicWaveletDecomposition<Real>& decomposition) {
  std::vector<std::vector<Real>> profile;
  profile.reserve(decomposition.details.size());
  for (const auto& level : decomposition.details) {
    std::vector<Real> moduli(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) moduli[i] = std::abs(level[i]);
    std::sort(moduli.begin(), moduli.end());
    profile.push_back(std::move(moduli));
  }
  return profile;
}

}  // namespace detail

// Sign-flip perturbation: decompose with an orthonormal periodic filter bank,
// multiply every detail coefficient by a +-1 drawn from next_sign (finest
// level first, ascending index within a level), keep the approximation, and
// reconstruct. Coefficient moduli are preserved exactly; applying the same
// draw twice is the identity. When trace is non-null it receives the
// coefficient moduli straddling the flip.
template <class Real, class SignFn>
BasicSignal<Real> perturb_wavelet_signs(const BasicSignal<Real>& f, const PerturbationSpec& spec,
                                        SignFn&& next_sign,
                                        BasicPerturbationTrace<Real>* trace = nullptr) {
  validate_signal(f);
  if (!detail::is_power_of_two(f.size())) {
    throw std::invalid_argument("perturb_wavelet_signs: length must be a power of two");
  }
  const int max_levels = max_dwt_levels(f.size());
  const int levels = spec.dwt_levels == 0 ? max_levels : spec.dwt_levels;
  if (levels < 1 || levels > max_levels) {
    throw std::invalid_argument("perturb_wavelet_signs: level count out of range");
  }
  auto decomposition = dwt_forward(f.samples, spec.filter_order, levels);
  if (trace) trace->moduli_before = detail::sorted_detail_moduli(decomposition);
  for (auto& level : decomposition.details) {
    for (auto& coefficient : level) {
      coefficient *= Real(next_sign());
    }
  }
  if (trace) trace->moduli_after = detail::sorted_detail_moduli(decomposition);
  BasicSignal<Real> out;
  out.samples = dwt_inverse(decomposition);
  out.label = f.label;
  return out;
}

template <class Real>
BasicSignal<Real> perturb_wavelet_signs(const BasicSignal<Real>& f, const PerturbationSpec& spec,
                                        BasicPerturbationTrace<Real>* trace = nullptr) {
  std::mt19937_64 rng(spec.seed);
  // Top engine bit as the Rademacher draw: mt19937_64's output sequence is
  // pinned by the standard, so results are reproducible across platforms.
  return perturb_wavelet_signs(f, spec, [&rng]() { return (rng() >> 63) ? -1 : +1; }, trace);
}

// Sorted absolute detail coefficients per level, from a fresh decomposition
// of f. Comparing profiles of a signal and its sign-perturbed version checks
// the amplitude-preservation property end to end; because the perturbed
// signal passed through one reconstruction, agreement is to machine rounding,
// not bitwise (for the bitwise statement use the perturbation trace).
template <class Real>
std::vector<std::vector<Real>> detail_modulus_profile(const BasicSignal<Real>& f,
                                                      int filter_order, int dwt_levels) {
  validate_signal(f);
  const int max_levels = max_dwt_levels(f.size());
  const int levels = dwt_levels == 0 ? max_levels : dwt_levels;
  if (levels < 1 || levels > max_levels) {
    throw std::invalid_argument("detail_modulus_profile: level count out of range");
  }
  return detail::sorted_detail_moduli(dwt_forward(f.samples, filter_order, levels));
}

}  // namespace wavesig
