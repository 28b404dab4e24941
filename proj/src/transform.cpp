// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "ewt/fft.hpp"
#include "parallel.hpp"

namespace ewt {

namespace {

// Tolerance for the imaginary residue of inverse transforms that must be
// real, relative to the peak amplitude of the data being transformed.
constexpr double kImagResidueTol = 1e-9;

double peak_abs(const std::vector<double>& samples) {
    double peak = 0.0;
    for (double value : samples) {
        peak = std::max(peak, std::abs(value));
    }
    return peak;
}

void check_residue(double residue, double reference, const char* where) {
    if (residue > kImagResidueTol * reference) {
        throw numeric_error(std::string(where) +
                            ": non-negligible imaginary residue in a real transform");
    }
}

} // namespace

EwtDecomposition ewt_forward(const Signal& signal, const FilterBank& bank) {
    detail::validate_samples(signal.samples, 2, "ewt_forward");
    if (signal.size() != bank.signal_length) {
        throw std::invalid_argument("ewt_forward: signal length does not match the filter bank");
    }
    if (bank.responses.empty()) {
        throw std::invalid_argument("ewt_forward: filter bank has no channels");
    }

    const std::vector<std::complex<double>> spectrum = fft::dft(signal.samples);
    const double reference = peak_abs(signal.samples);
    const std::size_t length = signal.size();

    EwtDecomposition decomposition;
    decomposition.bank = bank;
    decomposition.duration = signal.duration;
    decomposition.channels.resize(bank.responses.size());

    detail::parallel_for(bank.responses.size(), [&](std::size_t n) {
        // The filters are real and even in frequency, so multiplying by the
        // conjugate response equals multiplying by the response itself.
        std::vector<std::complex<double>> filtered(length);
        for (std::size_t k = 0; k < length; ++k) {
            filtered[k] = spectrum[k] * bank.responses[n][k];
        }
        double residue = 0.0;
        decomposition.channels[n] = fft::idft_real(filtered, &residue);
        check_residue(residue, reference, "ewt_forward");
    });
    return decomposition;
}

Signal ewt_inverse(const EwtDecomposition& decomposition) {
    const FilterBank& bank = decomposition.bank;
    if (decomposition.channels.size() != bank.responses.size()) {
        throw std::invalid_argument("ewt_inverse: channel count does not match the filter bank");
    }
    if (decomposition.channels.empty()) {
        throw std::invalid_argument("ewt_inverse: empty decomposition");
    }
    const std::size_t length = bank.signal_length;
    double reference = 0.0;

    std::vector<std::complex<double>> accumulated(length, {0.0, 0.0});
    for (std::size_t n = 0; n < decomposition.channels.size(); ++n) {
        const std::vector<double>& channel = decomposition.channels[n];
        detail::validate_samples(channel, 2, "ewt_inverse");
        if (channel.size() != length) {
            throw std::invalid_argument("ewt_inverse: channel length does not match the bank");
        }
        reference = std::max(reference, peak_abs(channel));
        const std::vector<std::complex<double>> spectrum = fft::dft(channel);
        for (std::size_t k = 0; k < length; ++k) {
            accumulated[k] += spectrum[k] * bank.responses[n][k];
        }
    }

    double residue = 0.0;
    Signal result;
    result.duration = decomposition.duration;
    result.samples = fft::idft_real(accumulated, &residue);
    check_residue(residue, reference, "ewt_inverse");
    return result;
}

std::vector<std::vector<double>> extract_modes(const EwtDecomposition& decomposition) {
    const FilterBank& bank = decomposition.bank;
    if (decomposition.channels.size() != bank.responses.size()) {
        throw std::invalid_argument("extract_modes: channel count does not match the filter bank");
    }
    const std::size_t length = bank.signal_length;

    std::vector<std::vector<double>> modes(decomposition.channels.size());
    detail::parallel_for(decomposition.channels.size(), [&](std::size_t n) {
        const std::vector<double>& channel = decomposition.channels[n];
        detail::validate_samples(channel, 2, "extract_modes");
        if (channel.size() != length) {
            throw std::invalid_argument("extract_modes: channel length does not match the bank");
        }
        const std::vector<std::complex<double>> spectrum = fft::dft(channel);
        std::vector<std::complex<double>> filtered(length);
        for (std::size_t k = 0; k < length; ++k) {
            filtered[k] = spectrum[k] * bank.responses[n][k];
        }
        double residue = 0.0;
        modes[n] = fft::idft_real(filtered, &residue);
        check_residue(residue, peak_abs(channel), "extract_modes");
    });
    return modes;
}

} // namespace ewt
