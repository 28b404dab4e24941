// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ewt/spectrum.hpp"

namespace ewt {

/// Polynomial ramp used inside the filter transition bands. Maps [0,1] to
/// [0,1] with three vanishing derivatives at both ends:
///   x^4 (35 - 84x + 70x^2 - 20x^3), clamped outside [0,1].
double beta_ramp(double x);

/// Largest transition half-width ratio for which the bank can be a tight
/// frame: min over interior boundary pairs of (w_{n+1}-w_n)/(w_{n+1}+w_n).
/// A single-channel segmentation has no constraint and returns 1.
double gamma_max(const Segmentation& segmentation);

/// Low-pass response at |omega| = w for a first boundary w1:
///   1 inside (1-gamma) w1, a cos(beta) roll-off across the transition band,
///   0 beyond (1+gamma) w1.
double scaling_response(double omega, double w1, double gamma);

/// Band-pass response between boundaries lo < hi: a sin(beta) rising edge
/// around lo, flat 1 in between, and a cos(beta) falling edge around hi.
/// When hi reaches pi the band is the top channel and stays at 1 through pi
/// (the falling edge is dropped so the partition closes at the Nyquist end).
double wavelet_response(double omega, double lo, double hi, double gamma);

/// Sampled frequency responses of one scaling filter plus the band-pass
/// filters, evaluated on the length-L DFT grid (bin k covers both +/- omega_k,
/// so responses are symmetric: response[n][k] == response[n][L-k]).
struct FilterBank {
    Segmentation segmentation;
    double gamma = 0.0;
    bool tight = false; ///< gamma < gamma_max, i.e. perfect reconstruction holds
    std::size_t signal_length = 0;
    std::vector<std::vector<double>> responses; ///< responses[channel][bin]
};

/// Build the bank for a segmentation on an L-point grid. Without an explicit
/// gamma the widest safe value min(0.95 * gamma_max, 0.45) is chosen. A
/// single-channel segmentation yields one all-pass filter.
FilterBank build_filterbank(const Segmentation& segmentation, std::size_t signal_length,
                            std::optional<double> gamma = std::nullopt);

} // namespace ewt
