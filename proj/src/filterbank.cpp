// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ewt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTopEdgeTol = 1e-12;

void validate_segmentation(const Segmentation& segmentation) {
    const std::vector<double>& b = segmentation.boundaries;
    if (b.size() < 2) {
        throw std::invalid_argument("filterbank: segmentation needs at least 2 boundaries");
    }
    if (std::abs(b.front()) > 0.0) {
        throw std::invalid_argument("filterbank: first boundary must be 0");
    }
    if (std::abs(b.back() - kPi) > kTopEdgeTol) {
        throw std::invalid_argument("filterbank: last boundary must be pi");
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (!(b[i] < b[i + 1])) {
            throw std::invalid_argument("filterbank: boundaries must be strictly increasing");
        }
    }
}

} // namespace

double beta_ramp(double x) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

double gamma_max(const Segmentation& segmentation) {
    validate_segmentation(segmentation);
    const std::vector<double>& b = segmentation.boundaries;
    if (b.size() == 2) {
        return 1.0; // single channel: no adjacent transition bands to keep apart
    }
    double best = 1.0;
    for (std::size_t i = 1; i + 1 < b.size(); ++i) {
        // Adjacent transition bands around w_n and w_{n+1} must not overlap:
        // (1+gamma) w_n < (1-gamma) w_{n+1}. The pair starting at w_0 = 0
        // imposes nothing (its ratio is 1).
        const double lo = b[i];
        const double hi = b[i + 1];
        best = std::min(best, (hi - lo) / (hi + lo));
    }
    return best;
}

double scaling_response(double omega, double w1, double gamma) {
    if (!(w1 > 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument("scaling_response: w1 and gamma must be positive");
    }
    const double a = std::abs(omega);
    const double inner = (1.0 - gamma) * w1;
    const double outer = (1.0 + gamma) * w1;
    if (a <= inner) {
        return 1.0;
    }
    if (a >= outer) {
        return 0.0;
    }
    const double x = (a - inner) / (2.0 * gamma * w1);
    return std::cos(0.5 * kPi * beta_ramp(x));
}

double wavelet_response(double omega, double lo, double hi, double gamma) {
    if (!(lo < hi)) {
        throw std::invalid_argument("wavelet_response: lo must be below hi");
    }
    if (!(lo > 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument("wavelet_response: lo and gamma must be positive");
    }
    const bool top = hi >= kPi - kTopEdgeTol;
    const double a = std::abs(omega);

    const double rise_start = (1.0 - gamma) * lo;
    const double rise_end = (1.0 + gamma) * lo;
    const double fall_start = (1.0 - gamma) * hi;
    const double fall_end = (1.0 + gamma) * hi;

    if (a >= rise_end && (top || a <= fall_start)) {
        return 1.0; // flat passband (extends through pi for the top channel)
    }
    if (!top && a > fall_start && a < fall_end) {
        const double x = (a - fall_start) / (2.0 * gamma * hi);
        return std::cos(0.5 * kPi * beta_ramp(x));
    }
    if (a > rise_start && a < rise_end) {
        const double x = (a - rise_start) / (2.0 * gamma * lo);
        return std::sin(0.5 * kPi * beta_ramp(x));
    }
    return 0.0;
}

FilterBank build_filterbank(const Segmentation& segmentation, std::size_t signal_length,
                            std::optional<double> gamma) {
    validate_segmentation(segmentation);
    if (signal_length < 2) {
        throw std::invalid_argument("build_filterbank: signal_length must be at least 2");
    }

    const double limit = gamma_max(segmentation);
    double g;
    if (gamma.has_value()) {
        g = *gamma;
        if (!(g > 0.0) || !(g < 1.0)) {
            throw std::invalid_argument("build_filterbank: gamma must be in (0, 1)");
        }
    } else {
        g = std::min(0.95 * limit, 0.45);
    }

    FilterBank bank;
    bank.segmentation = segmentation;
    bank.gamma = g;
    bank.tight = g < limit;
    bank.signal_length = signal_length;

    const std::size_t channels = segmentation.channel_count();
    const std::vector<double>& b = segmentation.boundaries;
    bank.responses.assign(channels, std::vector<double>(signal_length, 0.0));

    // Bins 0..floor(L/2) cover omega in [0, pi]; every higher bin is the
    // mirror of bin L-k, and copying (rather than recomputing from the folded
    // negative frequency) keeps the symmetry exact to the last bit.
    for (std::size_t k = 0; k <= signal_length / 2; ++k) {
        const double omega =
            2.0 * kPi * static_cast<double>(k) / static_cast<double>(signal_length);
        for (std::size_t n = 0; n < channels; ++n) {
            double value;
            if (channels == 1) {
                value = 1.0;
            } else if (n == 0) {
                value = scaling_response(omega, b[1], g);
            } else {
                value = wavelet_response(omega, b[n], b[n + 1], g);
            }
            bank.responses[n][k] = value;
            if (k != 0 && signal_length - k != k) {
                bank.responses[n][signal_length - k] = value;
            }
        }
    }
    return bank;
}

} // namespace ewt
