// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/fft.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace ewt::fft {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution of a plan is.
// We plan per call with FFTW_ESTIMATE, which keeps results bit-reproducible
// across runs (no wisdom-dependent algorithm switching) and costs little at
// the sizes this library handles.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> transform(const std::vector<std::complex<double>>& input,
                                            int sign) {
    if (input.empty()) {
        throw std::invalid_argument("fft: empty input");
    }
    std::vector<std::complex<double>> output(input.size());
    // std::complex<double> is layout-compatible with fftw_complex (double[2]).
    auto* in = reinterpret_cast<fftw_complex*>(
        const_cast<std::complex<double>*>(input.data()));
    auto* out = reinterpret_cast<fftw_complex*>(output.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(input.size()), in, out, sign,
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    if (plan == nullptr) {
        throw std::runtime_error("fft: planner failed");
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return output;
}

} // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& input) {
    return transform(input, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft(const std::vector<double>& input) {
    std::vector<std::complex<double>> complex_input(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        complex_input[i] = std::complex<double>(input[i], 0.0);
    }
    return transform(complex_input, FFTW_FORWARD);
}

std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& spectrum) {
    std::vector<std::complex<double>> output = transform(spectrum, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(spectrum.size());
    for (auto& value : output) {
        value *= scale;
    }
    return output;
}

std::vector<double> idft_real(const std::vector<std::complex<double>>& spectrum,
                              double* max_imag) {
    std::vector<std::complex<double>> complex_output = idft(spectrum);
    std::vector<double> output(complex_output.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < complex_output.size(); ++i) {
        output[i] = complex_output[i].real();
        worst = std::max(worst, std::abs(complex_output[i].imag()));
    }
    if (max_imag != nullptr) {
        *max_imag = worst;
    }
    return output;
}

} // namespace ewt::fft
