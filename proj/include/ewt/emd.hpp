// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ewt/types.hpp"

namespace ewt {

/// Mean of the upper and lower cubic-spline envelopes through the local
/// extrema, with two extrema mirrored across each end to anchor the splines.
/// Returns nullopt when the data has fewer than two maxima or two minima.
std::optional<std::vector<double>> envelope_mean(const std::vector<double>& samples);

/// Iteratively subtract the envelope mean until the update is small
/// (sum of squared changes < sd_threshold * energy of the previous iterate)
/// or max_iter passes elapse. Returns nullopt when the very first envelope
/// cannot be built (the input is monotone-like); if that happens mid-sift the
/// current iterate is returned as-is.
std::optional<Signal> sift(const Signal& signal, std::size_t max_iter = 50,
                           double sd_threshold = 0.2);

struct ImfSet {
    std::vector<Signal> imfs;
    Signal residue;
};

/// Classic sifting loop: peel off intrinsic mode functions until the residue
/// has fewer than three extrema, stops sifting, or max_imfs is reached.
/// Requires at least 16 samples.
ImfSet emd(const Signal& signal, std::size_t max_imfs = 10);

} // namespace ewt
