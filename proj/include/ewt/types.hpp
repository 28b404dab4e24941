// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewt {

/// Thrown when a file cannot be opened, read, written, or parsed.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal numeric invariant is violated (e.g. a transform
/// that must produce a real result leaves a non-negligible imaginary residue).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uniformly sampled real signal. Sample i sits at t = i * duration / size(),
/// i.e. the grid covers [0, duration) without the right endpoint.
struct Signal {
    std::vector<double> samples;
    double duration = 1.0;

    std::size_t size() const { return samples.size(); }
};

/// Dense row-major grayscale image.
struct Image {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> pixels;

    Image() = default;
    Image(std::size_t r, std::size_t c) : rows(r), cols(c), pixels(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return pixels[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

namespace detail {

/// Rejects empty/too-short or non-finite signals. `what` names the argument
/// in the exception message.
void validate_samples(const std::vector<double>& samples, std::size_t min_len,
                      const char* what);

void validate_image(const Image& img, std::size_t min_rows, std::size_t min_cols,
                    const char* what);

} // namespace detail

} // namespace ewt
