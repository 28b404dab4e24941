// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ewt/filterbank.hpp"
#include "ewt/types.hpp"

namespace ewt {

/// Average of the per-row DFT magnitude half spectra (length floor(cols/2)+1).
MagnitudeSpectrum mean_row_spectrum(const Image& image);

/// Average of the per-column DFT magnitude half spectra (length floor(rows/2)+1).
MagnitudeSpectrum mean_col_spectrum(const Image& image);

/// Separable 2-D decomposition: subband (m, n) is stored at index
/// m * col_channels + n, where m selects the row-direction (horizontal)
/// filter and n the column-direction (vertical) one.
struct Ewt2dDecomposition {
    std::vector<Image> subbands;
    FilterBank row_bank; ///< built from the mean row spectrum, filters along rows
    FilterBank col_bank; ///< built from the mean column spectrum, filters along columns
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// Detect row/column segmentations from the mean spectra, build one bank per
/// direction, and filter rows first, then columns. Requires rows, cols >= 4.
Ewt2dDecomposition ewt2d_forward(const Image& image, std::size_t row_channels,
                                 std::size_t col_channels,
                                 std::optional<double> gamma = std::nullopt);

/// Undo the separable filtering: recombine along columns within each row
/// group, then along rows. Exact for tight banks.
Image ewt2d_inverse(const Ewt2dDecomposition& decomposition);

} // namespace ewt
