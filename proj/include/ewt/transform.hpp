// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <vector>

#include "ewt/filterbank.hpp"
#include "ewt/types.hpp"

namespace ewt {

/// One real-valued time series per filter, plus the bank that produced them.
struct EwtDecomposition {
    std::vector<std::vector<double>> channels;
    FilterBank bank;
    double duration = 1.0;
};

/// Analysis: channel n = IDFT( DFT(f) * conj(H_n) ), circular convolution with
/// the time-reversed filter. Signal length must match the bank's grid.
EwtDecomposition ewt_forward(const Signal& signal, const FilterBank& bank);

/// Synthesis: sum over channels of IDFT( DFT(channel_n) * H_n ). Exact (up to
/// rounding) whenever the bank is a tight frame.
Signal ewt_inverse(const EwtDecomposition& decomposition);

/// Per-channel reconstruction IDFT( DFT(channel_n) * H_n ): the part of the
/// signal each filter is responsible for. Modes sum to ewt_inverse().
std::vector<std::vector<double>> extract_modes(const EwtDecomposition& decomposition);

} // namespace ewt
