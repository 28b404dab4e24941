// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include "ewt/emd.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace ewt {

namespace {

struct ExtremaSets {
    std::vector<std::size_t> maxima;
    std::vector<std::size_t> minima;
};

/// Interior extrema; a flat plateau counts once, at its leftmost sample.
ExtremaSets find_extrema(const std::vector<double>& x) {
    ExtremaSets sets;
    for (std::size_t k = 1; k + 1 < x.size(); ++k) {
        if (x[k] > x[k - 1] && x[k] >= x[k + 1]) {
            sets.maxima.push_back(k);
        } else if (x[k] < x[k - 1] && x[k] <= x[k + 1]) {
            sets.minima.push_back(k);
        }
    }
    return sets;
}

/// Natural cubic spline through (xs, ys), evaluated at 0, 1, ..., length-1.
/// Second derivatives vanish at both end knots; the interior ones come from
/// the standard tridiagonal system, solved by forward elimination.
std::vector<double> spline_at_samples(const std::vector<double>& xs,
                                      const std::vector<double>& ys, std::size_t length) {
    const std::size_t n = xs.size();
    std::vector<double> m(n, 0.0); // second derivatives at the knots
    if (n > 2) {
        std::vector<double> diag(n, 0.0);
        std::vector<double> rhs(n, 0.0);
        std::vector<double> upper(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h_left = xs[i] - xs[i - 1];
            const double h_right = xs[i + 1] - xs[i];
            diag[i] = 2.0 * (h_left + h_right);
            upper[i] = h_right;
            rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / h_right - (ys[i] - ys[i - 1]) / h_left);
        }
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double h_left = xs[i] - xs[i - 1]; // also the sub-diagonal entry
            const double factor = h_left / diag[i - 1];
            diag[i] -= factor * upper[i - 1];
            rhs[i] -= factor * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        }
    }

    std::vector<double> out(length);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < length; ++i) {
        const double x = static_cast<double>(i);
        while (seg + 2 < n && x > xs[seg + 1]) {
            ++seg;
        }
        const double h = xs[seg + 1] - xs[seg];
        const double a = (xs[seg + 1] - x) / h;
        const double b = (x - xs[seg]) / h;
        out[i] = a * ys[seg] + b * ys[seg + 1] +
                 ((a * a * a - a) * m[seg] + (b * b * b - b) * m[seg + 1]) * (h * h) / 6.0;
    }
    return out;
}

/// Envelope through the extrema at positions `idx`, with the two extrema
/// nearest each end mirrored across sample 0 and sample length-1 so the
/// spline is anchored beyond the data.
std::vector<double> envelope(const std::vector<double>& samples,
                             const std::vector<std::size_t>& idx) {
    const double last = static_cast<double>(samples.size() - 1);
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(idx.size() + 4);
    ys.reserve(idx.size() + 4);

    xs.push_back(-static_cast<double>(idx[1]));
    ys.push_back(samples[idx[1]]);
    xs.push_back(-static_cast<double>(idx[0]));
    ys.push_back(samples[idx[0]]);
    for (std::size_t k : idx) {
        xs.push_back(static_cast<double>(k));
        ys.push_back(samples[k]);
    }
    const std::size_t m = idx.size();
    xs.push_back(2.0 * last - static_cast<double>(idx[m - 1]));
    ys.push_back(samples[idx[m - 1]]);
    xs.push_back(2.0 * last - static_cast<double>(idx[m - 2]));
    ys.push_back(samples[idx[m - 2]]);

    return spline_at_samples(xs, ys, samples.size());
}

} // namespace

std::optional<std::vector<double>> envelope_mean(const std::vector<double>& samples) {
    detail::validate_samples(samples, 4, "envelope_mean");
    const ExtremaSets extrema = find_extrema(samples);
    if (extrema.maxima.size() < 2 || extrema.minima.size() < 2) {
        return std::nullopt;
    }
    const std::vector<double> upper = envelope(samples, extrema.maxima);
    const std::vector<double> lower = envelope(samples, extrema.minima);
    std::vector<double> mean(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        mean[i] = 0.5 * (upper[i] + lower[i]);
    }
    return mean;
}

std::optional<Signal> sift(const Signal& signal, std::size_t max_iter, double sd_threshold) {
    detail::validate_samples(signal.samples, 4, "sift");
    if (!(sd_threshold > 0.0)) {
        throw std::invalid_argument("sift: sd_threshold must be positive");
    }

    Signal current = signal;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        const std::optional<std::vector<double>> mean = envelope_mean(current.samples);
        if (!mean.has_value()) {
            if (iter == 0) {
                return std::nullopt; // nothing oscillatory to extract
            }
            return current;
        }
        double change = 0.0;
        double energy = 0.0;
        for (std::size_t i = 0; i < current.samples.size(); ++i) {
            change += (*mean)[i] * (*mean)[i];
            energy += current.samples[i] * current.samples[i];
            current.samples[i] -= (*mean)[i];
        }
        if (energy > 0.0 && change / energy < sd_threshold) {
            return current;
        }
        if (energy == 0.0) {
            return current;
        }
    }
    return current;
}

ImfSet emd(const Signal& signal, std::size_t max_imfs) {
    detail::validate_samples(signal.samples, 16, "emd");

    ImfSet result;
    result.residue = signal;
    while (result.imfs.size() < max_imfs) {
        const ExtremaSets extrema = find_extrema(result.residue.samples);
        if (extrema.maxima.size() + extrema.minima.size() < 3) {
            break;
        }
        const std::optional<Signal> imf = sift(result.residue);
        if (!imf.has_value()) {
            break;
        }
        result.imfs.push_back(*imf);
        for (std::size_t i = 0; i < result.residue.samples.size(); ++i) {
            result.residue.samples[i] -= imf->samples[i];
        }
    }
    return result;
}

} // namespace ewt
