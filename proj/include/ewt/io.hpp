// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ewt/hilbert.hpp"
#include "ewt/types.hpp"

namespace ewt {

/// One sample per line.
Signal read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const Signal& signal);

/// One row per line, comma-separated columns. Every row must have the same width.
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const std::vector<std::vector<double>>& rows);

Image read_image_csv(const std::string& path);
void write_image_csv(const std::string& path, const Image& image);

/// Binary 8-bit PGM, min-max scaled (a constant image maps to 0).
void write_pgm(const std::string& path, const Image& image);

/// Everything needed to invert a decomposition without re-detecting anything.
struct DecompositionManifest {
    std::vector<double> boundaries;
    double gamma = 0.0;
    bool tight = false;
    std::size_t signal_length = 0;
    double duration = 1.0;
};

void write_manifest(const std::string& path, const DecompositionManifest& manifest);
DecompositionManifest read_manifest(const std::string& path);

/// "channel,t,omega,amplitude" rows, with a header line.
void write_tfr_csv(const std::string& path, const TfrPoints& tfr);

} // namespace ewt
