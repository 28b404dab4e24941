// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ewt {

namespace {

constexpr double kPi = std::numbers::pi;

void require_length(std::size_t length) {
    if (length < 2) {
        throw std::invalid_argument("generator: length must be at least 2");
    }
}

} // namespace

Signal generate_sig1(std::size_t length) {
    require_length(length);
    Signal signal;
    signal.samples.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(length);
        signal.samples[i] = 6.0 * t + std::cos(8.0 * kPi * t) + 0.5 * std::cos(40.0 * kPi * t);
    }
    return signal;
}

Signal generate_sig2(std::size_t length) {
    require_length(length);
    Signal signal;
    signal.samples.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(length);
        double value = 6.0 * t * t + std::cos(10.0 * kPi * t + 10.0 * kPi * t * t);
        if (t > 0.5) {
            value += std::cos(80.0 * kPi * t - 15.0 * kPi);
        } else {
            value += std::cos(60.0 * kPi * t);
        }
        signal.samples[i] = value;
    }
    return signal;
}

Signal generate_sig3(std::size_t length) {
    require_length(length);
    Signal signal;
    signal.samples.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(length);
        const double first = 1.0 / (1.2 + std::cos(2.0 * kPi * t));
        const double second =
            std::cos(32.0 * kPi * t + std::cos(64.0 * kPi * t)) / (1.5 + std::sin(2.0 * kPi * t));
        signal.samples[i] = first + second;
    }
    return signal;
}

Image generate_test_image(std::size_t rows, std::size_t cols, double lf_amp, double hf1_amp,
                          double hf2_amp) {
    if (rows < 8 || cols < 8) {
        throw std::invalid_argument("generate_test_image: rows and cols must be at least 8");
    }
    Image image(rows, cols);
    const double r = static_cast<double>(rows);
    const double c = static_cast<double>(cols);
    for (std::size_t y = 0; y < rows; ++y) {
        for (std::size_t x = 0; x < cols; ++x) {
            const double xf = static_cast<double>(x);
            const double yf = static_cast<double>(y);
            double value = 0.5;
            value += lf_amp * std::cos(2.0 * kPi * 2.0 * xf / c) * std::cos(2.0 * kPi * 2.0 * yf / r);
            value += hf1_amp * (1.0 + 0.5 * std::cos(2.0 * kPi * yf / r)) *
                     std::cos(2.0 * kPi * (32.0 * xf / c + 12.0 * yf / r));
            value += hf2_amp * (1.0 + 0.5 * std::cos(2.0 * kPi * xf / c)) *
                     std::cos(2.0 * kPi * (8.0 * xf / c + 48.0 * yf / r));
            image.at(y, x) = value;
        }
    }
    return image;
}

} // namespace ewt
