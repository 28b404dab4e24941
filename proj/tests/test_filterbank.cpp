// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ewt/filterbank.hpp"

using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

ewt::Segmentation make_seg(std::vector<double> boundaries) {
    ewt::Segmentation seg;
    seg.boundaries = std::move(boundaries);
    return seg;
}
} // namespace

TEST_CASE("transition ramp: pinned values, range, and symmetry") {
    CHECK(ewt::beta_ramp(0.0) == 0.0);
    CHECK(ewt::beta_ramp(1.0) == 1.0);
    CHECK(ewt::beta_ramp(-2.0) == 0.0);
    CHECK(ewt::beta_ramp(3.0) == 1.0);
    CHECK(ewt::beta_ramp(0.25) == Approx(0.070556640625).epsilon(1e-15));
    CHECK(ewt::beta_ramp(0.5) == Approx(0.5).epsilon(1e-15));
    for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        CHECK(ewt::beta_ramp(x) + ewt::beta_ramp(1.0 - x) == Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("tight-frame limit: pinned value and single-channel case") {
    const ewt::Segmentation seg = make_seg({0.0, 1.5, 2.0, 2.8, kPi});
    CHECK(ewt::gamma_max(seg) == Approx(0.057491765845544764).epsilon(1e-13));
    CHECK(ewt::gamma_max(make_seg({0.0, kPi})) == 1.0);
    CHECK_THROWS_AS(ewt::gamma_max(make_seg({0.0, 2.0, 1.0, kPi})), std::invalid_argument);
    CHECK_THROWS_AS(ewt::gamma_max(make_seg({0.1, kPi})), std::invalid_argument);
    CHECK_THROWS_AS(ewt::gamma_max(make_seg({0.0, 1.0})), std::invalid_argument);
}

TEST_CASE("low-pass response: flat core, half-power at the boundary, zero outside") {
    const double w1 = 1.0;
    const double g = 0.2;
    CHECK(ewt::scaling_response(0.0, w1, g) == 1.0);
    CHECK(ewt::scaling_response(0.79, w1, g) == 1.0);          // inside (1-g) w1
    CHECK(ewt::scaling_response(-0.5, w1, g) == 1.0);          // even in omega
    CHECK(ewt::scaling_response(1.21, w1, g) == 0.0);          // beyond (1+g) w1
    CHECK(ewt::scaling_response(w1, w1, g) ==
          Approx(std::cos(kPi / 4.0)).epsilon(1e-15));         // exact boundary: cos(pi/2 * 1/2)
    CHECK_THROWS_AS(ewt::scaling_response(0.5, 0.0, g), std::invalid_argument);
    CHECK_THROWS_AS(ewt::scaling_response(0.5, w1, 0.0), std::invalid_argument);
}

TEST_CASE("band-pass response: edges meet neighbours at half power") {
    const double lo = 1.0;
    const double hi = 2.0;
    const double g = 0.2;
    CHECK(ewt::wavelet_response(1.5, lo, hi, g) == 1.0);
    CHECK(ewt::wavelet_response(lo, lo, hi, g) == Approx(std::sin(kPi / 4.0)).epsilon(1e-15));
    CHECK(ewt::wavelet_response(hi, lo, hi, g) == Approx(std::cos(kPi / 4.0)).epsilon(1e-15));
    CHECK(ewt::wavelet_response(0.5, lo, hi, g) == 0.0);
    CHECK(ewt::wavelet_response(2.5, lo, hi, g) == 0.0);
    CHECK(ewt::wavelet_response(-1.5, lo, hi, g) == 1.0);
    CHECK_THROWS_AS(ewt::wavelet_response(1.0, 2.0, 1.0, g), std::invalid_argument);
}

TEST_CASE("top band holds at one through the Nyquist end") {
    const double g = 0.2;
    CHECK(ewt::wavelet_response(kPi, 2.0, kPi, g) == 1.0);
    // no falling edge: still 1 just below pi even inside what would be the
    // falling transition of an interior band
    CHECK(ewt::wavelet_response(0.99 * kPi, 2.0, kPi, g) == 1.0);
    // the rising edge stays
    CHECK(ewt::wavelet_response(2.0, 2.0, kPi, g) == Approx(std::sin(kPi / 4.0)).epsilon(1e-15));
}

TEST_CASE("bank construction: auto width, tight flag, symmetry") {
    const ewt::Segmentation seg = make_seg({0.0, 1.5, 2.0, 2.8, kPi});
    const ewt::FilterBank bank = ewt::build_filterbank(seg, 1000);
    REQUIRE(bank.responses.size() == 4);
    REQUIRE(bank.responses[0].size() == 1000);
    CHECK(bank.gamma == Approx(0.95 * 0.057491765845544764).epsilon(1e-13));
    CHECK(bank.tight);
    CHECK(bank.signal_length == 1000);
    for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t k = 1; k < 1000; ++k) {
            REQUIRE(bank.responses[n][k] == Approx(bank.responses[n][1000 - k]).epsilon(1e-14));
        }
    }

    // wide segmentation (limit 0.7254): auto width caps at 0.45
    const ewt::FilterBank wide = ewt::build_filterbank(make_seg({0.0, 0.5, kPi}), 100);
    CHECK(wide.gamma == Approx(0.45).epsilon(1e-15));
}

TEST_CASE("bank construction: partition of unity within the tight regime") {
    const ewt::Segmentation seg = make_seg({0.0, 1.5, 2.0, 2.8, kPi});
    const ewt::FilterBank bank = ewt::build_filterbank(seg, 1000, 0.05);
    CHECK(bank.tight);
    double worst = 0.0;
    for (std::size_t k = 0; k < 1000; ++k) {
        double total = 0.0;
        for (const std::vector<double>& response : bank.responses) {
            total += response[k] * response[k];
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("bank construction: oversized width breaks the partition and clears the flag") {
    const ewt::Segmentation seg = make_seg({0.0, 1.5, 2.0, kPi});
    const double limit = ewt::gamma_max(seg); // 1/7 for this segmentation
    CHECK(limit == Approx(1.0 / 7.0).epsilon(1e-15));

    const ewt::FilterBank bank = ewt::build_filterbank(seg, 1000, limit + 0.05);
    CHECK_FALSE(bank.tight);
    double worst = 0.0;
    for (std::size_t k = 0; k < 1000; ++k) {
        double total = 0.0;
        for (const std::vector<double>& response : bank.responses) {
            total += response[k] * response[k];
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("bank construction: single channel is all-pass") {
    const ewt::FilterBank bank = ewt::build_filterbank(make_seg({0.0, kPi}), 64);
    REQUIRE(bank.responses.size() == 1);
    for (double value : bank.responses[0]) {
        CHECK(value == 1.0);
    }
    CHECK(bank.tight);
}

TEST_CASE("bank construction: argument validation") {
    const ewt::Segmentation seg = make_seg({0.0, 1.5, kPi});
    CHECK_THROWS_AS(ewt::build_filterbank(seg, 1), std::invalid_argument);
    CHECK_THROWS_AS(ewt::build_filterbank(seg, 100, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ewt::build_filterbank(seg, 100, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ewt::build_filterbank(make_seg({0.0, 1.0, 1.0, kPi}), 100),
                    std::invalid_argument);
}
