// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/ewt2d.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "ewt/fft.hpp"
#include "parallel.hpp"

namespace ewt {

namespace {

Image transpose(const Image& image) {
    Image out(image.cols, image.rows);
    for (std::size_t r = 0; r < image.rows; ++r) {
        for (std::size_t c = 0; c < image.cols; ++c) {
            out.at(c, r) = image.at(r, c);
        }
    }
    return out;
}

double peak_abs(const Image& image) {
    double peak = 0.0;
    for (double value : image.pixels) {
        peak = std::max(peak, std::abs(value));
    }
    return peak;
}

/// Circularly filter one line with a real, even frequency response.
std::vector<double> filter_line(const std::vector<double>& line,
                                const std::vector<double>& response, double reference,
                                const char* where) {
    std::vector<std::complex<double>> spectrum = fft::dft(line);
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        spectrum[k] *= response[k];
    }
    double residue = 0.0;
    std::vector<double> out = fft::idft_real(spectrum, &residue);
    if (residue > 1e-9 * reference) {
        throw numeric_error(std::string(where) + ": non-negligible imaginary residue");
    }
    return out;
}

/// Apply one filter along every row of the image.
Image filter_rows(const Image& image, const std::vector<double>& response, double reference,
                  const char* where) {
    Image out(image.rows, image.cols);
    std::vector<double> line(image.cols);
    for (std::size_t r = 0; r < image.rows; ++r) {
        for (std::size_t c = 0; c < image.cols; ++c) {
            line[c] = image.at(r, c);
        }
        const std::vector<double> filtered = filter_line(line, response, reference, where);
        for (std::size_t c = 0; c < image.cols; ++c) {
            out.at(r, c) = filtered[c];
        }
    }
    return out;
}

/// Apply one filter along every column of the image.
Image filter_cols(const Image& image, const std::vector<double>& response, double reference,
                  const char* where) {
    Image out(image.rows, image.cols);
    std::vector<double> line(image.rows);
    for (std::size_t c = 0; c < image.cols; ++c) {
        for (std::size_t r = 0; r < image.rows; ++r) {
            line[r] = image.at(r, c);
        }
        const std::vector<double> filtered = filter_line(line, response, reference, where);
        for (std::size_t r = 0; r < image.rows; ++r) {
            out.at(r, c) = filtered[r];
        }
    }
    return out;
}

} // namespace

MagnitudeSpectrum mean_row_spectrum(const Image& image) {
    detail::validate_image(image, 1, 2, "mean_row_spectrum");
    const std::size_t half = image.cols / 2;
    MagnitudeSpectrum result;
    result.signal_length = image.cols;
    result.values.assign(half + 1, 0.0);

    std::vector<double> line(image.cols);
    for (std::size_t r = 0; r < image.rows; ++r) {
        for (std::size_t c = 0; c < image.cols; ++c) {
            line[c] = image.at(r, c);
        }
        const std::vector<std::complex<double>> spectrum = fft::dft(line);
        for (std::size_t k = 0; k <= half; ++k) {
            result.values[k] += std::abs(spectrum[k]);
        }
    }
    for (double& value : result.values) {
        value /= static_cast<double>(image.rows);
    }
    return result;
}

MagnitudeSpectrum mean_col_spectrum(const Image& image) {
    detail::validate_image(image, 2, 1, "mean_col_spectrum");
    // A column of the image is a row of its transpose; delegating guarantees
    // the two directions use identical arithmetic.
    return mean_row_spectrum(transpose(image));
}

Ewt2dDecomposition ewt2d_forward(const Image& image, std::size_t row_channels,
                                 std::size_t col_channels, std::optional<double> gamma) {
    detail::validate_image(image, 4, 4, "ewt2d_forward");
    if (row_channels < 1 || col_channels < 1) {
        throw std::invalid_argument("ewt2d_forward: channel counts must be at least 1");
    }

    const MaximaSet row_maxima = find_local_maxima(mean_row_spectrum(image));
    const MaximaSet col_maxima = find_local_maxima(mean_col_spectrum(image));
    const Segmentation row_seg = boundaries_from_maxima(row_maxima, row_channels, image.cols);
    const Segmentation col_seg = boundaries_from_maxima(col_maxima, col_channels, image.rows);

    Ewt2dDecomposition decomposition;
    decomposition.row_bank = build_filterbank(row_seg, image.cols, gamma);
    decomposition.col_bank = build_filterbank(col_seg, image.rows, gamma);
    decomposition.rows = image.rows;
    decomposition.cols = image.cols;

    const std::size_t c_row = decomposition.row_bank.responses.size();
    const std::size_t c_col = decomposition.col_bank.responses.size();
    const double reference = peak_abs(image);
    decomposition.subbands.resize(c_row * c_col);

    detail::parallel_for(c_row, [&](std::size_t m) {
        const Image row_filtered =
            filter_rows(image, decomposition.row_bank.responses[m], reference, "ewt2d_forward");
        for (std::size_t n = 0; n < c_col; ++n) {
            decomposition.subbands[m * c_col + n] = filter_cols(
                row_filtered, decomposition.col_bank.responses[n], reference, "ewt2d_forward");
        }
    });
    return decomposition;
}

Image ewt2d_inverse(const Ewt2dDecomposition& decomposition) {
    const std::size_t c_row = decomposition.row_bank.responses.size();
    const std::size_t c_col = decomposition.col_bank.responses.size();
    if (decomposition.subbands.size() != c_row * c_col || c_row == 0 || c_col == 0) {
        throw std::invalid_argument("ewt2d_inverse: subband count does not match the banks");
    }
    for (const Image& subband : decomposition.subbands) {
        if (subband.rows != decomposition.rows || subband.cols != decomposition.cols) {
            throw std::invalid_argument("ewt2d_inverse: subband size mismatch");
        }
        detail::validate_image(subband, 4, 4, "ewt2d_inverse");
    }

    double reference = 0.0;
    for (const Image& subband : decomposition.subbands) {
        reference = std::max(reference, peak_abs(subband));
    }

    // Undo the separable analysis: within each row group, recombine the
    // column direction; then recombine the row direction across groups.
    std::vector<Image> row_groups(c_row);
    detail::parallel_for(c_row, [&](std::size_t m) {
        Image group(decomposition.rows, decomposition.cols);
        for (std::size_t n = 0; n < c_col; ++n) {
            const Image restored =
                filter_cols(decomposition.subbands[m * c_col + n],
                            decomposition.col_bank.responses[n], reference, "ewt2d_inverse");
            for (std::size_t i = 0; i < group.pixels.size(); ++i) {
                group.pixels[i] += restored.pixels[i];
            }
        }
        row_groups[m] = std::move(group);
    });

    Image result(decomposition.rows, decomposition.cols);
    for (std::size_t m = 0; m < c_row; ++m) {
        const Image restored = filter_rows(row_groups[m], decomposition.row_bank.responses[m],
                                           reference, "ewt2d_inverse");
        for (std::size_t i = 0; i < result.pixels.size(); ++i) {
            result.pixels[i] += restored.pixels[i];
        }
    }
    return result;
}

} // namespace ewt
