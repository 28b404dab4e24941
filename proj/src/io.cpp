// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ewt {

namespace {

/// Write through a temporary sibling and rename into place, so readers never
/// observe a half-written file and a failed write leaves the target intact.
void atomic_write(const std::string& path, bool binary,
                  const std::function<void(std::ostream&)>& writer) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
        if (!out) {
            throw io_error("cannot open for writing: " + tmp);
        }
        writer(out);
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw io_error("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw io_error("cannot replace " + path);
    }
}

double parse_double(const std::string& text, const std::string& path, std::size_t line_no) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        // Allow trailing whitespace only.
        for (std::size_t i = consumed; i < text.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                throw std::invalid_argument("trailing characters");
            }
        }
        return value;
    } catch (const std::exception&) {
        throw io_error(path + ":" + std::to_string(line_no) + ": not a number: '" + text + "'");
    }
}

bool is_blank(const std::string& line) {
    for (char ch : line) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

} // namespace

Signal read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open: " + path);
    }
    Signal signal;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) {
            continue;
        }
        signal.samples.push_back(parse_double(line, path, line_no));
    }
    if (signal.samples.empty()) {
        throw io_error("no samples in " + path);
    }
    return signal;
}

void write_signal_csv(const std::string& path, const Signal& signal) {
    atomic_write(path, false, [&](std::ostream& out) {
        out << std::setprecision(17);
        for (double value : signal.samples) {
            out << value << '\n';
        }
    });
}

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open: " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) {
            continue;
        }
        std::vector<double> row;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            row.push_back(parse_double(field, path, line_no));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw io_error(path + ":" + std::to_string(line_no) + ": ragged row (" +
                           std::to_string(row.size()) + " columns, expected " +
                           std::to_string(rows.front().size()) + ")");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw io_error("no rows in " + path);
    }
    return rows;
}

void write_matrix_csv(const std::string& path, const std::vector<std::vector<double>>& rows) {
    atomic_write(path, false, [&](std::ostream& out) {
        out << std::setprecision(17);
        for (const std::vector<double>& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) {
                    out << ',';
                }
                out << row[c];
            }
            out << '\n';
        }
    });
}

Image read_image_csv(const std::string& path) {
    const std::vector<std::vector<double>> rows = read_matrix_csv(path);
    Image image(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < image.rows; ++r) {
        for (std::size_t c = 0; c < image.cols; ++c) {
            image.at(r, c) = rows[r][c];
        }
    }
    return image;
}

void write_image_csv(const std::string& path, const Image& image) {
    std::vector<std::vector<double>> rows(image.rows, std::vector<double>(image.cols));
    for (std::size_t r = 0; r < image.rows; ++r) {
        for (std::size_t c = 0; c < image.cols; ++c) {
            rows[r][c] = image.at(r, c);
        }
    }
    write_matrix_csv(path, rows);
}

void write_pgm(const std::string& path, const Image& image) {
    if (image.rows == 0 || image.cols == 0) {
        throw std::invalid_argument("write_pgm: empty image");
    }
    double lo = image.pixels.front();
    double hi = lo;
    for (double value : image.pixels) {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    const double span = hi - lo;

    atomic_write(path, true, [&](std::ostream& out) {
        out << "P5\n" << image.cols << ' ' << image.rows << "\n255\n";
        for (double value : image.pixels) {
            int gray = 0;
            if (span > 0.0) {
                gray = static_cast<int>(std::lround((value - lo) / span * 255.0));
                gray = std::min(255, std::max(0, gray));
            }
            out.put(static_cast<char>(static_cast<unsigned char>(gray)));
        }
    });
}

void write_manifest(const std::string& path, const DecompositionManifest& manifest) {
    nlohmann::json doc;
    doc["boundaries"] = manifest.boundaries;
    doc["gamma"] = manifest.gamma;
    doc["tight"] = manifest.tight;
    doc["length"] = manifest.signal_length;
    doc["duration"] = manifest.duration;
    atomic_write(path, false, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

DecompositionManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open: " + path);
    }
    DecompositionManifest manifest;
    try {
        const nlohmann::json doc = nlohmann::json::parse(in);
        manifest.boundaries = doc.at("boundaries").get<std::vector<double>>();
        manifest.gamma = doc.at("gamma").get<double>();
        manifest.tight = doc.at("tight").get<bool>();
        manifest.signal_length = doc.at("length").get<std::size_t>();
        manifest.duration = doc.at("duration").get<double>();
    } catch (const nlohmann::json::exception& error) {
        throw io_error(path + ": invalid manifest: " + error.what());
    }
    return manifest;
}

void write_tfr_csv(const std::string& path, const TfrPoints& tfr) {
    atomic_write(path, false, [&](std::ostream& out) {
        out << "channel,t,omega,amplitude\n" << std::setprecision(17);
        for (const TfrPoint& point : tfr.points) {
            out << point.channel << ',' << point.t << ',' << point.omega << ','
                << point.amplitude << '\n';
        }
    });
}

} // namespace ewt
