// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstdint>
#include <vector>

#include "ewt/transform.hpp"
#include "ewt/types.hpp"

namespace ewt {

/// Discrete Hilbert transform: multiply the spectrum by -i*sign(omega), with
/// the DC bin (and the Nyquist bin for even lengths) zeroed.
Signal hilbert(const Signal& signal);

/// Envelope and instantaneous frequency of one real channel. Frequencies are
/// in radians per sample, clamped to [0, pi]. Samples whose envelope is
/// negligible relative to the channel peak carry no usable phase; they are
/// flagged degenerate and report frequency 0.
struct AnalyticChannel {
    std::vector<double> amplitude;
    std::vector<double> inst_frequency;
    std::vector<std::uint8_t> degenerate;
};

AnalyticChannel analytic_channel(const std::vector<double>& samples);

/// One sample of the time-frequency energy distribution.
struct TfrPoint {
    std::size_t channel = 0;
    double t = 0.0;     ///< seconds
    double omega = 0.0; ///< radians per sample
    double amplitude = 0.0;
};

/// All channels' points in channel-major order (channel 0 first, each channel
/// in time order).
struct TfrPoints {
    std::size_t channel_count = 0;
    std::size_t length = 0;
    std::vector<TfrPoint> points;
};

TfrPoints build_tfr(const EwtDecomposition& decomposition);

/// Accumulate the point cloud onto a time x frequency grid. Row 0 holds the
/// highest frequencies (omega = pi), the bottom row omega = 0.
Image tfr_raster(const TfrPoints& tfr, std::size_t time_bins = 512,
                 std::size_t freq_bins = 256);

} // namespace ewt
