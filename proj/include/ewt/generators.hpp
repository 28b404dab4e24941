// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include "ewt/types.hpp"

namespace ewt {

/// Linear trend plus two tones: 6t + cos(8πt) + 0.5·cos(40πt), t = i/length.
Signal generate_sig1(std::size_t length = 1000);

/// Quadratic trend, linear chirp, and a frequency jump at t = 0.5:
/// 6t² + cos(10πt + 10πt²) + { cos(80πt − 15π) for t > 0.5, cos(60πt) otherwise }.
Signal generate_sig2(std::size_t length = 1000);

/// Two nonstationary AM-FM components:
/// 1/(1.2 + cos(2πt)) + cos(32πt + cos(64πt)) / (1.5 + sin(2πt)).
Signal generate_sig3(std::size_t length = 1000);

/// Deterministic synthetic image used by the 2-D transform tests:
///   0.5
///   + lf_amp  · cos(2π·2x/cols) · cos(2π·2y/rows)
///   + hf1_amp · (1 + 0.5·cos(2πy/rows)) · cos(2π·(32x/cols + 12y/rows))
///   + hf2_amp · (1 + 0.5·cos(2πx/cols)) · cos(2π·(8x/cols + 48y/rows))
/// with x the column index and y the row index. The three cosines produce
/// mean-spectrum maxima at row bins {2, 8, 32} and column bins {2, 12, 48}.
/// Requires rows, cols >= 8.
Image generate_test_image(std::size_t rows, std::size_t cols,
                          double lf_amp = 1.0, double hf1_amp = 0.8,
                          double hf2_amp = 0.7);

} // namespace ewt
