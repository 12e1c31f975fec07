#pragma once

// Umbrella header: complex-wavelet sign analysis of periodic 1D signals.
//
// Pipeline: build an analytic one-sided wavelet window (wavelet.hpp), pair a
// signal against it across a geometric scale grid (transform.hpp), average
// the per-scale phases into a signature that separates jumps from cusps
// (signature.hpp). operators.hpp provides the spectral operators the
// signature is covariant under, corpus.hpp the reference signals and the
// wavelet-sign perturbation, io.hpp the CSV serialization.

#include "corpus.hpp"
#include "dwt.hpp"
#include "fft.hpp"
#include "io.hpp"
#include "operators.hpp"
#include "scales.hpp"
#include "signal.hpp"
#include "signature.hpp"
#include "transform.hpp"
#include "transition.hpp"
#include "wavelet.hpp"
