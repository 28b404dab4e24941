// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ewt::detail {

void validate_samples(const std::vector<double>& samples, std::size_t min_len,
                      const char* what) {
    if (samples.size() < min_len) {
        throw std::invalid_argument(std::string(what) + ": need at least " +
                                    std::to_string(min_len) + " samples, got " +
                                    std::to_string(samples.size()));
    }
    for (double value : samples) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument(std::string(what) + ": samples must be finite");
        }
    }
}

void validate_image(const Image& image, std::size_t min_rows, std::size_t min_cols,
                    const char* what) {
    if (image.rows < min_rows || image.cols < min_cols) {
        throw std::invalid_argument(std::string(what) + ": image must be at least " +
                                    std::to_string(min_rows) + "x" + std::to_string(min_cols));
    }
    if (image.pixels.size() != image.rows * image.cols) {
        throw std::invalid_argument(std::string(what) + ": pixel buffer size mismatch");
    }
    for (double value : image.pixels) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument(std::string(what) + ": pixels must be finite");
        }
    }
}

} // namespace ewt::detail
