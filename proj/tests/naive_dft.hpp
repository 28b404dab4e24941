// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

// Reference DFT used as the test oracle. Deliberately O(N^2) and written
// against the textbook definition, with the twiddle angle reduced modulo N
// before the trig call so it stays accurate for large j*k products. It shares
// no code with the library's transform path.
namespace oracle {

inline std::vector<std::complex<double>> dft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t reduced = (j * k) % n;
            const double angle =
                -2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(n);
            sum += x[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[k] = sum;
    }
    return out;
}

inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t reduced = (j * k) % n;
            const double angle =
                -2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(n);
            sum += x[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[k] = sum;
    }
    return out;
}

inline std::vector<double> idft_real(const std::vector<std::complex<double>>& spectrum) {
    const std::size_t n = spectrum.size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t reduced = (j * k) % n;
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(n);
            sum += spectrum[k] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[j] = sum.real() / static_cast<double>(n);
    }
    return out;
}

/// One analysis channel computed entirely through the reference path:
/// mask the reference spectrum with the response, reference-invert.
inline std::vector<double> masked_channel(const std::vector<double>& x,
                                          const std::vector<double>& response) {
    std::vector<std::complex<double>> spectrum = dft(x);
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        spectrum[k] *= response[k];
    }
    return idft_real(spectrum);
}

} // namespace oracle
