// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstddef>
#include <vector>

#include "ewt/types.hpp"

namespace ewt {

/// Magnitude of the DFT over the non-negative frequency half, bins 0..floor(L/2).
/// `signal_length` keeps the original L so bins can be mapped back to radians
/// via omega = 2*pi*bin / signal_length.
struct MagnitudeSpectrum {
    std::vector<double> values;
    std::size_t signal_length = 0;
};

struct SpectrumMaximum {
    std::size_t bin = 0;
    double magnitude = 0.0; ///< normalized: spectrum floor -> 0, largest maximum -> 1
};

/// Local maxima of a half spectrum, sorted by descending normalized magnitude
/// (ties broken toward the lower bin).
struct MaximaSet {
    std::vector<SpectrumMaximum> entries;
};

/// Channel edges in radians, always starting at 0 and ending at pi.
/// N+1 boundaries delimit N channels.
struct Segmentation {
    std::vector<double> boundaries;
    std::size_t channel_count() const {
        return boundaries.size() < 2 ? 0 : boundaries.size() - 1;
    }
};

MagnitudeSpectrum half_spectrum(const Signal& signal);

/// Interior local maxima (values[k] > values[k-1] and values[k] >= values[k+1],
/// so the leftmost sample of a plateau wins). Magnitudes are normalized by
/// anchoring the global spectrum minimum at 0 and the largest maximum at 1.
MaximaSet find_local_maxima(const MagnitudeSpectrum& spectrum);

/// Keep the `channels` largest maxima and place one boundary halfway between
/// each pair of (bin-sorted) neighbours, i.e. at pi*(k_j + k_{j+1})/L. When
/// fewer maxima exist than requested, the channel count drops to match.
Segmentation boundaries_from_maxima(const MaximaSet& maxima, std::size_t channels,
                                    std::size_t signal_length);

/// Number of maxima whose normalized magnitude is >= alpha, alpha in [0, 1].
std::size_t estimate_num_modes(const MaximaSet& maxima, double alpha);

} // namespace ewt
