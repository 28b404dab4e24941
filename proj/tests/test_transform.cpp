// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "ewt/generators.hpp"
#include "ewt/spectrum.hpp"
#include "ewt/transform.hpp"
#include "naive_dft.hpp"

using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

ewt::Segmentation make_seg(std::vector<double> boundaries) {
    ewt::Segmentation seg;
    seg.boundaries = std::move(boundaries);
    return seg;
}

ewt::FilterBank detected_bank(const ewt::Signal& signal, std::size_t channels) {
    const ewt::MaximaSet maxima = find_local_maxima(half_spectrum(signal));
    const ewt::Segmentation seg = boundaries_from_maxima(maxima, channels, signal.size());
    return ewt::build_filterbank(seg, signal.size());
}

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num / den);
}
} // namespace

TEST_CASE("tight bank round-trips the trend-plus-tones signal") {
    const ewt::Signal signal = ewt::generate_sig1();
    const ewt::FilterBank bank = detected_bank(signal, 2);
    const ewt::EwtDecomposition dec = ewt_forward(signal, bank);
    REQUIRE(dec.channels.size() == 2);
    REQUIRE(dec.channels[0].size() == 1000);

    const ewt::Signal restored = ewt_inverse(dec);
    CHECK(rel_l2(restored.samples, signal.samples) < 1e-12);
    CHECK(restored.duration == signal.duration);
}

TEST_CASE("single all-pass channel reproduces the input as its only channel") {
    const ewt::Signal signal = ewt::generate_sig3(128);
    const ewt::FilterBank bank =
        ewt::build_filterbank(make_seg({0.0, kPi}), signal.size());
    const ewt::EwtDecomposition dec = ewt_forward(signal, bank);
    REQUIRE(dec.channels.size() == 1);
    CHECK(rel_l2(dec.channels[0], signal.samples) < 1e-13);
    CHECK(rel_l2(ewt_inverse(dec).samples, signal.samples) < 1e-13);
}

TEST_CASE("forward channels match the reference masking oracle") {
    std::mt19937 rng(20260819);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);

    const std::size_t length = 64;
    const ewt::Segmentation seg = make_seg({0.0, 0.6, 1.4, 2.4, kPi});
    const ewt::FilterBank bank = ewt::build_filterbank(seg, length);

    for (int trial = 0; trial < 5; ++trial) {
        ewt::Signal signal;
        signal.samples.resize(length);
        for (double& value : signal.samples) {
            value = uniform(rng);
        }
        const ewt::EwtDecomposition dec = ewt_forward(signal, bank);
        double worst = 0.0;
        for (std::size_t n = 0; n < bank.responses.size(); ++n) {
            const std::vector<double> expected =
                oracle::masked_channel(signal.samples, bank.responses[n]);
            for (std::size_t i = 0; i < length; ++i) {
                worst = std::max(worst, std::abs(dec.channels[n][i] - expected[i]));
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("modes sum to the reconstruction") {
    const ewt::Signal signal = ewt::generate_sig2();
    const ewt::FilterBank bank = detected_bank(signal, 8);
    const ewt::EwtDecomposition dec = ewt_forward(signal, bank);
    const std::vector<std::vector<double>> modes = extract_modes(dec);
    REQUIRE(modes.size() == dec.channels.size());

    std::vector<double> total(signal.size(), 0.0);
    for (const std::vector<double>& mode : modes) {
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i] += mode[i];
        }
    }
    CHECK(rel_l2(total, signal.samples) < 1e-12);
}

TEST_CASE("oversized transition width degrades reconstruction measurably") {
    const ewt::Signal signal = ewt::generate_sig1();
    const ewt::Segmentation seg = make_seg({0.0, 1.5, 2.0, kPi});
    const ewt::FilterBank loose =
        ewt::build_filterbank(seg, signal.size(), 1.0 / 7.0 + 0.05);
    CHECK_FALSE(loose.tight);
    const ewt::Signal restored = ewt_inverse(ewt_forward(signal, loose));
    CHECK(rel_l2(restored.samples, signal.samples) > 1e-6);

    const ewt::FilterBank snug = ewt::build_filterbank(seg, signal.size());
    CHECK(snug.tight);
    const ewt::Signal good = ewt_inverse(ewt_forward(signal, snug));
    CHECK(rel_l2(good.samples, signal.samples) < 1e-12);
}

TEST_CASE("transform argument validation") {
    const ewt::Signal signal = ewt::generate_sig1(100);
    const ewt::FilterBank bank = ewt::build_filterbank(make_seg({0.0, 1.0, kPi}), 128);
    CHECK_THROWS_AS(ewt_forward(signal, bank), std::invalid_argument);

    ewt::EwtDecomposition dec;
    dec.bank = bank;
    dec.channels.resize(1); // bank has two channels
    CHECK_THROWS_AS(ewt_inverse(dec), std::invalid_argument);
    CHECK_THROWS_AS(extract_modes(dec), std::invalid_argument);

    dec.channels.assign(2, std::vector<double>(100, 0.0)); // wrong length
    CHECK_THROWS_AS(ewt_inverse(dec), std::invalid_argument);
}
