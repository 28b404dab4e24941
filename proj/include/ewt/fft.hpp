// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <complex>
#include <vector>

namespace ewt::fft {

/// Unnormalized forward DFT of a complex sequence.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

/// Unnormalized forward DFT of a real sequence (full-length complex result).
std::vector<std::complex<double>> dft(const std::vector<double>& x);

/// Inverse DFT including the 1/N factor.
std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& x);

/// Inverse DFT of a spectrum expected to describe a real sequence. Returns the
/// real part; if `max_imag` is non-null it receives the largest absolute
/// imaginary residue so callers can assert on it.
std::vector<double> idft_real(const std::vector<std::complex<double>>& spectrum,
                              double* max_imag = nullptr);

} // namespace ewt::fft
