// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ewt/fft.hpp"
#include "parallel.hpp"

namespace ewt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateRatio = 1e-12;

/// One-sided analytic spectrum: keep DC, double strictly positive frequencies,
/// keep the Nyquist bin (even lengths), zero the negative half.
std::vector<std::complex<double>> analytic_signal(const std::vector<double>& samples) {
    const std::size_t length = samples.size();
    std::vector<std::complex<double>> spectrum = fft::dft(samples);
    std::vector<std::complex<double>> onesided(length, {0.0, 0.0});
    onesided[0] = spectrum[0];
    const std::size_t half = length / 2;
    for (std::size_t k = 1; k < (length + 1) / 2; ++k) {
        onesided[k] = 2.0 * spectrum[k];
    }
    if (length % 2 == 0) {
        onesided[half] = spectrum[half];
    }
    return fft::idft(onesided);
}

/// Unwrap into a continuous phase: shift each increment into (-pi, pi].
std::vector<double> unwrap_phase(const std::vector<double>& wrapped) {
    std::vector<double> phase(wrapped.size());
    if (wrapped.empty()) {
        return phase;
    }
    phase[0] = wrapped[0];
    for (std::size_t i = 1; i < wrapped.size(); ++i) {
        double delta = wrapped[i] - wrapped[i - 1];
        while (delta > kPi) {
            delta -= 2.0 * kPi;
        }
        while (delta <= -kPi) {
            delta += 2.0 * kPi;
        }
        phase[i] = phase[i - 1] + delta;
    }
    return phase;
}

} // namespace

Signal hilbert(const Signal& signal) {
    detail::validate_samples(signal.samples, 2, "hilbert");
    const std::size_t length = signal.size();
    std::vector<std::complex<double>> spectrum = fft::dft(signal.samples);

    // Multiply by -i * sign(omega): positive frequencies rotate by -i,
    // negative ones by +i, DC (and the Nyquist bin, which is its own mirror)
    // stay zero.
    const std::complex<double> minus_i(0.0, -1.0);
    const std::complex<double> plus_i(0.0, 1.0);
    spectrum[0] = {0.0, 0.0};
    const std::size_t half = length / 2;
    for (std::size_t k = 1; k < (length + 1) / 2; ++k) {
        spectrum[k] *= minus_i;
        spectrum[length - k] *= plus_i;
    }
    if (length % 2 == 0) {
        spectrum[half] = {0.0, 0.0};
    }

    double residue = 0.0;
    Signal result;
    result.duration = signal.duration;
    result.samples = fft::idft_real(spectrum, &residue);
    double reference = 0.0;
    for (double value : signal.samples) {
        reference = std::max(reference, std::abs(value));
    }
    if (residue > 1e-9 * reference) {
        throw numeric_error("hilbert: non-negligible imaginary residue");
    }
    return result;
}

AnalyticChannel analytic_channel(const std::vector<double>& samples) {
    detail::validate_samples(samples, 2, "analytic_channel");
    const std::size_t length = samples.size();
    const std::vector<std::complex<double>> analytic = analytic_signal(samples);

    AnalyticChannel channel;
    channel.amplitude.resize(length);
    channel.inst_frequency.assign(length, 0.0);
    channel.degenerate.assign(length, 0);

    double peak = 0.0;
    std::vector<double> wrapped(length);
    for (std::size_t i = 0; i < length; ++i) {
        channel.amplitude[i] = std::abs(analytic[i]);
        wrapped[i] = std::arg(analytic[i]);
        peak = std::max(peak, channel.amplitude[i]);
    }
    const std::vector<double> phase = unwrap_phase(wrapped);

    const double threshold = kDegenerateRatio * peak;
    for (std::size_t i = 0; i < length; ++i) {
        if (channel.amplitude[i] < threshold) {
            channel.degenerate[i] = 1;
            continue; // frequency stays 0 where the phase is meaningless
        }
        double freq;
        if (i == 0) {
            freq = phase[1] - phase[0];
        } else if (i + 1 == length) {
            freq = phase[length - 1] - phase[length - 2];
        } else {
            freq = 0.5 * (phase[i + 1] - phase[i - 1]);
        }
        channel.inst_frequency[i] = std::clamp(freq, 0.0, kPi);
    }
    return channel;
}

TfrPoints build_tfr(const EwtDecomposition& decomposition) {
    if (decomposition.channels.empty()) {
        throw std::invalid_argument("build_tfr: empty decomposition");
    }
    const std::size_t length = decomposition.channels.front().size();
    const double dt = decomposition.duration / static_cast<double>(length);

    TfrPoints tfr;
    tfr.channel_count = decomposition.channels.size();
    tfr.length = length;
    tfr.points.resize(tfr.channel_count * length);

    detail::parallel_for(tfr.channel_count, [&](std::size_t n) {
        const AnalyticChannel analytic = analytic_channel(decomposition.channels[n]);
        for (std::size_t i = 0; i < length; ++i) {
            TfrPoint& point = tfr.points[n * length + i];
            point.channel = n;
            point.t = static_cast<double>(i) * dt;
            point.omega = analytic.inst_frequency[i];
            point.amplitude = analytic.amplitude[i];
        }
    });
    return tfr;
}

Image tfr_raster(const TfrPoints& tfr, std::size_t time_bins, std::size_t freq_bins) {
    if (time_bins < 1 || freq_bins < 1) {
        throw std::invalid_argument("tfr_raster: grid must be at least 1x1");
    }
    if (tfr.points.empty()) {
        throw std::invalid_argument("tfr_raster: no points to raster");
    }
    double t_max = 0.0;
    for (const TfrPoint& point : tfr.points) {
        t_max = std::max(t_max, point.t);
    }
    if (t_max <= 0.0) {
        t_max = 1.0;
    }

    Image image(freq_bins, time_bins);
    for (const TfrPoint& point : tfr.points) {
        std::size_t col = static_cast<std::size_t>(point.t / t_max * static_cast<double>(time_bins));
        col = std::min(col, time_bins - 1);
        // omega = 0 lands on the bottom row, omega = pi on row 0.
        std::size_t row_from_bottom =
            static_cast<std::size_t>(point.omega / kPi * static_cast<double>(freq_bins));
        row_from_bottom = std::min(row_from_bottom, freq_bins - 1);
        const std::size_t row = freq_bins - 1 - row_from_bottom;
        image.at(row, col) += point.amplitude;
    }
    return image;
}

} // namespace ewt
