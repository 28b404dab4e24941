// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ewt/fft.hpp"

namespace ewt {

MagnitudeSpectrum half_spectrum(const Signal& signal) {
    detail::validate_samples(signal.samples, 2, "half_spectrum");
    const std::vector<std::complex<double>> spectrum = fft::dft(signal.samples);
    const std::size_t half = signal.size() / 2;
    MagnitudeSpectrum result;
    result.signal_length = signal.size();
    result.values.resize(half + 1);
    for (std::size_t k = 0; k <= half; ++k) {
        result.values[k] = std::abs(spectrum[k]);
    }
    return result;
}

MaximaSet find_local_maxima(const MagnitudeSpectrum& spectrum) {
    const std::vector<double>& values = spectrum.values;
    if (values.size() < 3) {
        throw std::invalid_argument("find_local_maxima: need at least 3 spectrum bins");
    }
    for (double value : values) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument("find_local_maxima: spectrum must be finite");
        }
    }

    MaximaSet result;
    for (std::size_t k = 1; k + 1 < values.size(); ++k) {
        // Strict rise on the left, non-strict fall on the right: the leftmost
        // sample of a flat plateau counts as the maximum.
        if (values[k] > values[k - 1] && values[k] >= values[k + 1]) {
            result.entries.push_back({k, values[k]});
        }
    }
    if (result.entries.empty()) {
        return result;
    }

    const double floor = *std::min_element(values.begin(), values.end());
    double peak = result.entries.front().magnitude;
    for (const SpectrumMaximum& entry : result.entries) {
        peak = std::max(peak, entry.magnitude);
    }
    const double span = peak - floor;
    for (SpectrumMaximum& entry : result.entries) {
        entry.magnitude = span > 0.0 ? (entry.magnitude - floor) / span : 1.0;
    }

    std::stable_sort(result.entries.begin(), result.entries.end(),
                     [](const SpectrumMaximum& a, const SpectrumMaximum& b) {
                         if (a.magnitude != b.magnitude) {
                             return a.magnitude > b.magnitude;
                         }
                         return a.bin < b.bin;
                     });
    return result;
}

Segmentation boundaries_from_maxima(const MaximaSet& maxima, std::size_t channels,
                                    std::size_t signal_length) {
    if (channels < 1) {
        throw std::invalid_argument("boundaries_from_maxima: need at least 1 channel");
    }
    if (signal_length < 2) {
        throw std::invalid_argument("boundaries_from_maxima: signal_length must be at least 2");
    }
    // When fewer maxima exist than channels requested, the segmentation
    // simply has fewer channels (at minimum one, spanning [0, pi]).
    const std::size_t kept_count = std::min(channels, maxima.entries.size());

    std::vector<std::size_t> kept_bins;
    kept_bins.reserve(kept_count);
    for (std::size_t i = 0; i < kept_count; ++i) {
        kept_bins.push_back(maxima.entries[i].bin);
    }
    std::sort(kept_bins.begin(), kept_bins.end());

    Segmentation segmentation;
    segmentation.boundaries.push_back(0.0);
    for (std::size_t i = 0; i + 1 < kept_bins.size(); ++i) {
        const double midpoint = std::numbers::pi *
                                static_cast<double>(kept_bins[i] + kept_bins[i + 1]) /
                                static_cast<double>(signal_length);
        segmentation.boundaries.push_back(midpoint);
    }
    segmentation.boundaries.push_back(std::numbers::pi);
    return segmentation;
}

std::size_t estimate_num_modes(const MaximaSet& maxima, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("estimate_num_modes: alpha must be in [0, 1]");
    }
    std::size_t count = 0;
    for (const SpectrumMaximum& entry : maxima.entries) {
        if (entry.magnitude >= alpha) {
            ++count;
        }
    }
    return count;
}

} // namespace ewt
