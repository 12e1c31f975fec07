#pragma once

// Geometric scale grid a_j = a0 * 2^{-j/Q}, j = 0..J-1: J scales, Q voices
// per octave, coarsest first. Signs are averaged over this grid, so J is the
// sample count of the fine-scale limit being estimated.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wavesig {

template <class Real = double>
struct BasicScaleGrid {
  std::vector<Real> scales;  // strictly decreasing, positive
  Real base_scale = Real(1);
  int voices_per_octave = 1;

  std::size_t count() const { return scales.size(); }
};
using ScaleGrid = BasicScaleGrid<double>;

template <class Real = double>
BasicScaleGrid<Real> make_scale_grid(Real base_scale, int voices_per_octave, int count) {
  if (!(base_scale > Real(0)) || !std::isfinite(base_scale)) {
    throw std::invalid_argument("scale grid: base scale must be positive and finite");
  }
  if (voices_per_octave < 1) {
    throw std::invalid_argument("scale grid: voices per octave must be positive");
  }
  if (count < 1) throw std::invalid_argument("scale grid: scale count must be positive");
  BasicScaleGrid<Real> grid;
  grid.base_scale = base_scale;
  grid.voices_per_octave = voices_per_octave;
  grid.scales.resize(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    grid.scales[static_cast<std::size_t>(j)] =
        base_scale * std::pow(Real(2), -Real(j) / Real(voices_per_octave));
  }
  return grid;
}

}  // namespace wavesig
