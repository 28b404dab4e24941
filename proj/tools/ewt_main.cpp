// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ewt/emd.hpp"
#include "ewt/ewt2d.hpp"
#include "ewt/generators.hpp"
#include "ewt/hilbert.hpp"
#include "ewt/io.hpp"
#include "ewt/spectrum.hpp"
#include "ewt/transform.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

ewt::Signal generate_named(const std::string& kind, std::size_t length) {
    if (kind == "sig1") {
        return ewt::generate_sig1(length);
    }
    if (kind == "sig2") {
        return ewt::generate_sig2(length);
    }
    if (kind == "sig3") {
        return ewt::generate_sig3(length);
    }
    throw std::invalid_argument("unknown signal kind: " + kind);
}

/// Channel count: explicit when given, otherwise the number of spectrum
/// maxima at least as prominent as alpha (and at least one).
std::size_t choose_channels(const ewt::MaximaSet& maxima, std::optional<std::size_t> channels,
                            double alpha) {
    if (channels.has_value()) {
        return *channels;
    }
    const std::size_t detected = ewt::estimate_num_modes(maxima, alpha);
    return detected > 0 ? detected : 1;
}

ewt::FilterBank bank_for_signal(const ewt::Signal& signal, std::optional<std::size_t> channels,
                                double alpha, std::optional<double> gamma) {
    const ewt::MaximaSet maxima = ewt::find_local_maxima(ewt::half_spectrum(signal));
    const std::size_t count = choose_channels(maxima, channels, alpha);
    const ewt::Segmentation segmentation =
        ewt::boundaries_from_maxima(maxima, count, signal.size());
    return ewt::build_filterbank(segmentation, signal.size(), gamma);
}

ewt::DecompositionManifest manifest_from(const ewt::FilterBank& bank, double duration) {
    ewt::DecompositionManifest manifest;
    manifest.boundaries = bank.segmentation.boundaries;
    manifest.gamma = bank.gamma;
    manifest.tight = bank.tight;
    manifest.signal_length = bank.signal_length;
    manifest.duration = duration;
    return manifest;
}

/// Rebuild a decomposition from a channels matrix plus the manifest that the
/// forward pass wrote, without re-detecting anything from the data.
ewt::EwtDecomposition load_decomposition(const std::string& channels_path,
                                         const std::string& manifest_path) {
    const std::vector<std::vector<double>> rows = ewt::read_matrix_csv(channels_path);
    const ewt::DecompositionManifest manifest = ewt::read_manifest(manifest_path);
    ewt::Segmentation segmentation;
    segmentation.boundaries = manifest.boundaries;
    ewt::FilterBank bank =
        ewt::build_filterbank(segmentation, manifest.signal_length, manifest.gamma);
    if (rows.size() != bank.responses.size()) {
        throw std::invalid_argument("channels file has " + std::to_string(rows.size()) +
                                    " rows but the manifest describes " +
                                    std::to_string(bank.responses.size()) + " channels");
    }
    for (const std::vector<double>& row : rows) {
        if (row.size() != manifest.signal_length) {
            throw std::invalid_argument("channel length does not match the manifest");
        }
    }
    ewt::EwtDecomposition decomposition;
    decomposition.channels = rows;
    decomposition.bank = std::move(bank);
    decomposition.duration = manifest.duration;
    return decomposition;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Empirical wavelet decomposition toolkit"};
    app.require_subcommand(1);
    std::cout << std::setprecision(17);

    // generate
    auto* cmd_generate = app.add_subcommand("generate", "Write a built-in test signal or image");
    std::string gen_kind = "sig1";
    std::size_t gen_length = 1000;
    std::size_t gen_rows = 128;
    std::size_t gen_cols = 128;
    std::string gen_output;
    cmd_generate->add_option("--kind", gen_kind, "sig1, sig2, sig3, or image")
        ->check(CLI::IsMember({"sig1", "sig2", "sig3", "image"}));
    cmd_generate->add_option("--length", gen_length, "Samples (signals only)");
    cmd_generate->add_option("--rows", gen_rows, "Rows (image only)");
    cmd_generate->add_option("--cols", gen_cols, "Columns (image only)");
    cmd_generate->add_option("-o,--output", gen_output, "Output CSV path")->required();
    cmd_generate->callback([&] {
        if (gen_kind == "image") {
            ewt::write_image_csv(gen_output, ewt::generate_test_image(gen_rows, gen_cols));
        } else {
            ewt::write_signal_csv(gen_output, generate_named(gen_kind, gen_length));
        }
    });

    // boundaries
    auto* cmd_boundaries =
        app.add_subcommand("boundaries", "Detect spectrum segmentation boundaries");
    std::string bnd_input;
    std::size_t bnd_channels = 0;
    double bnd_alpha = 0.3;
    double bnd_duration = 1.0;
    cmd_boundaries->add_option("-i,--input", bnd_input, "Signal CSV")->required();
    auto* bnd_channels_opt = cmd_boundaries->add_option("--channels", bnd_channels, "Fixed channel count");
    cmd_boundaries->add_option("--alpha", bnd_alpha,
                               "Detection threshold in [0,1] when --channels is absent");
    cmd_boundaries->add_option("--duration", bnd_duration, "Signal duration in seconds");
    cmd_boundaries->callback([&] {
        const ewt::Signal signal = ewt::read_signal_csv(bnd_input);
        const ewt::MaximaSet maxima = ewt::find_local_maxima(ewt::half_spectrum(signal));
        const std::size_t count = choose_channels(
            maxima, bnd_channels_opt->count() > 0 ? std::optional<std::size_t>(bnd_channels) : std::nullopt,
            bnd_alpha);
        const ewt::Segmentation segmentation =
            ewt::boundaries_from_maxima(maxima, count, signal.size());
        if (!(bnd_duration > 0.0)) {
            throw std::invalid_argument("--duration must be positive");
        }
        const double to_hz =
            static_cast<double>(signal.size()) / (2.0 * kPi * bnd_duration);
        std::cout << "omega_rad,freq_hz\n";
        for (double omega : segmentation.boundaries) {
            std::cout << omega << ',' << omega * to_hz << '\n';
        }
    });

    // detect-n
    auto* cmd_detect = app.add_subcommand("detect-n", "Estimate mode count at thresholds");
    std::string det_input;
    std::vector<double> det_alphas;
    cmd_detect->add_option("-i,--input", det_input, "Signal CSV")->required();
    cmd_detect->add_option("--alpha", det_alphas, "Thresholds (default 0.1 0.3 0.4 0.5)");
    cmd_detect->callback([&] {
        const ewt::Signal signal = ewt::read_signal_csv(det_input);
        const ewt::MaximaSet maxima = ewt::find_local_maxima(ewt::half_spectrum(signal));
        if (det_alphas.empty()) {
            det_alphas = {0.1, 0.3, 0.4, 0.5};
        }
        std::cout << "alpha,count\n";
        for (double alpha : det_alphas) {
            std::cout << alpha << ',' << ewt::estimate_num_modes(maxima, alpha) << '\n';
        }
    });

    // ewt
    auto* cmd_ewt = app.add_subcommand("ewt", "Decompose a signal into channels");
    std::string ewt_input;
    std::string ewt_output;
    std::string ewt_manifest;
    std::size_t ewt_channels = 0;
    double ewt_gamma = 0.0;
    double ewt_alpha = 0.3;
    double ewt_duration = 1.0;
    cmd_ewt->add_option("-i,--input", ewt_input, "Signal CSV")->required();
    cmd_ewt->add_option("-o,--output", ewt_output, "Channels CSV (one row per channel)")
        ->required();
    cmd_ewt->add_option("--manifest", ewt_manifest, "Manifest JSON output")->required();
    auto* ewt_channels_opt = cmd_ewt->add_option("--channels", ewt_channels, "Fixed channel count");
    cmd_ewt->add_option("--alpha", ewt_alpha,
                        "Detection threshold in [0,1] when --channels is absent");
    auto* ewt_gamma_opt =
        cmd_ewt->add_option("--gamma", ewt_gamma, "Transition half-width ratio in (0,1)");
    cmd_ewt->add_option("--duration", ewt_duration, "Signal duration in seconds");
    cmd_ewt->callback([&] {
        ewt::Signal signal = ewt::read_signal_csv(ewt_input);
        signal.duration = ewt_duration;
        const ewt::FilterBank bank = bank_for_signal(
            signal,
            ewt_channels_opt->count() > 0 ? std::optional<std::size_t>(ewt_channels) : std::nullopt,
            ewt_alpha,
            ewt_gamma_opt->count() > 0 ? std::optional<double>(ewt_gamma) : std::nullopt);
        const ewt::EwtDecomposition decomposition = ewt::ewt_forward(signal, bank);
        ewt::write_matrix_csv(ewt_output, decomposition.channels);
        ewt::write_manifest(ewt_manifest, manifest_from(bank, signal.duration));
        if (!bank.tight) {
            std::cerr << "warning: gamma " << bank.gamma
                      << " is not below the tight-frame limit; reconstruction is approximate\n";
        }
    });

    // iewt
    auto* cmd_iewt = app.add_subcommand("iewt", "Reconstruct a signal from channels");
    std::string iewt_input;
    std::string iewt_manifest;
    std::string iewt_output;
    std::string iewt_reference;
    cmd_iewt->add_option("-i,--input", iewt_input, "Channels CSV")->required();
    cmd_iewt->add_option("--manifest", iewt_manifest, "Manifest JSON from the forward pass")
        ->required();
    cmd_iewt->add_option("-o,--output", iewt_output, "Signal CSV")->required();
    cmd_iewt->add_option("--reference", iewt_reference,
                         "Optional original signal CSV; prints the relative L2 error");
    cmd_iewt->callback([&] {
        const ewt::EwtDecomposition decomposition =
            load_decomposition(iewt_input, iewt_manifest);
        const ewt::Signal recon = ewt::ewt_inverse(decomposition);
        ewt::write_signal_csv(iewt_output, recon);
        if (!iewt_reference.empty()) {
            const ewt::Signal reference = ewt::read_signal_csv(iewt_reference);
            if (reference.samples.size() != recon.samples.size()) {
                throw std::invalid_argument("reference length does not match the reconstruction");
            }
            double num = 0.0;
            double den = 0.0;
            for (std::size_t i = 0; i < recon.samples.size(); ++i) {
                const double d = recon.samples[i] - reference.samples[i];
                num += d * d;
                den += reference.samples[i] * reference.samples[i];
            }
            const double err = den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
            std::cout << "relative_l2_error: " << err << '\n';
        }
    });

    // modes
    auto* cmd_modes = app.add_subcommand("modes", "Per-channel signal reconstructions");
    std::string modes_input;
    std::string modes_manifest;
    std::string modes_output;
    cmd_modes->add_option("-i,--input", modes_input, "Channels CSV")->required();
    cmd_modes->add_option("--manifest", modes_manifest, "Manifest JSON from the forward pass")
        ->required();
    cmd_modes->add_option("-o,--output", modes_output, "Modes CSV (one row per mode)")
        ->required();
    cmd_modes->callback([&] {
        const ewt::EwtDecomposition decomposition =
            load_decomposition(modes_input, modes_manifest);
        ewt::write_matrix_csv(modes_output, ewt::extract_modes(decomposition));
    });

    // tfr
    auto* cmd_tfr = app.add_subcommand("tfr", "Time-frequency representation of channels");
    std::string tfr_input;
    std::string tfr_manifest;
    std::string tfr_output;
    std::string tfr_pgm;
    std::size_t tfr_time_bins = 512;
    std::size_t tfr_freq_bins = 256;
    cmd_tfr->add_option("-i,--input", tfr_input, "Channels CSV")->required();
    cmd_tfr->add_option("--manifest", tfr_manifest, "Manifest JSON from the forward pass")
        ->required();
    cmd_tfr->add_option("-o,--output", tfr_output, "Point cloud CSV")->required();
    cmd_tfr->add_option("--pgm", tfr_pgm, "Optional rasterized PGM image");
    cmd_tfr->add_option("--time-bins", tfr_time_bins, "Raster width");
    cmd_tfr->add_option("--freq-bins", tfr_freq_bins, "Raster height (row 0 = highest)");
    cmd_tfr->callback([&] {
        const ewt::EwtDecomposition decomposition = load_decomposition(tfr_input, tfr_manifest);
        const ewt::TfrPoints tfr = ewt::build_tfr(decomposition);
        ewt::write_tfr_csv(tfr_output, tfr);
        if (!tfr_pgm.empty()) {
            ewt::write_pgm(tfr_pgm, ewt::tfr_raster(tfr, tfr_time_bins, tfr_freq_bins));
        }
    });

    // ewt2d
    auto* cmd_2d = app.add_subcommand("ewt2d", "Separable 2-D decomposition of an image");
    std::string td_input;
    std::string td_prefix;
    std::string td_recon;
    std::size_t td_row_channels = 3;
    std::size_t td_col_channels = 3;
    double td_gamma = 0.0;
    cmd_2d->add_option("-i,--input", td_input, "Image CSV")->required();
    cmd_2d->add_option("-o,--output-prefix", td_prefix, "Subbands go to <prefix>_sub_<m>_<n>.csv")
        ->required();
    cmd_2d->add_option("--row-channels", td_row_channels, "Channels along rows");
    cmd_2d->add_option("--col-channels", td_col_channels, "Channels along columns");
    auto* td_gamma_opt =
        cmd_2d->add_option("--gamma", td_gamma, "Transition half-width ratio in (0,1)");
    cmd_2d->add_option("--recon", td_recon, "Optional reconstructed image CSV");
    cmd_2d->callback([&] {
        const ewt::Image image = ewt::read_image_csv(td_input);
        const ewt::Ewt2dDecomposition decomposition = ewt::ewt2d_forward(
            image, td_row_channels, td_col_channels,
            td_gamma_opt->count() > 0 ? std::optional<double>(td_gamma) : std::nullopt);
        const std::size_t c_col = decomposition.col_bank.responses.size();
        for (std::size_t idx = 0; idx < decomposition.subbands.size(); ++idx) {
            const std::string path = td_prefix + "_sub_" + std::to_string(idx / c_col) + "_" +
                                     std::to_string(idx % c_col) + ".csv";
            ewt::write_image_csv(path, decomposition.subbands[idx]);
        }
        const ewt::Image restored = ewt::ewt2d_inverse(decomposition);
        double worst = 0.0;
        for (std::size_t i = 0; i < image.pixels.size(); ++i) {
            worst = std::max(worst, std::abs(restored.pixels[i] - image.pixels[i]));
        }
        std::cout << "subbands: " << decomposition.subbands.size() << '\n';
        std::cout << "round_trip_max_error: " << worst << '\n';
        if (!td_recon.empty()) {
            ewt::write_image_csv(td_recon, restored);
        }
    });

    // emd
    auto* cmd_emd = app.add_subcommand("emd", "Empirical mode decomposition by sifting");
    std::string emd_input;
    std::string emd_prefix;
    std::size_t emd_max_imfs = 10;
    cmd_emd->add_option("-i,--input", emd_input, "Signal CSV")->required();
    cmd_emd->add_option("-o,--output-prefix", emd_prefix,
                        "IMFs go to <prefix>_imf_<k>.csv plus <prefix>_residue.csv")
        ->required();
    cmd_emd->add_option("--max-imfs", emd_max_imfs, "Upper bound on extracted IMFs");
    cmd_emd->callback([&] {
        const ewt::Signal signal = ewt::read_signal_csv(emd_input);
        const ewt::ImfSet set = ewt::emd(signal, emd_max_imfs);
        for (std::size_t k = 0; k < set.imfs.size(); ++k) {
            ewt::write_signal_csv(emd_prefix + "_imf_" + std::to_string(k) + ".csv",
                                  set.imfs[k]);
        }
        ewt::write_signal_csv(emd_prefix + "_residue.csv", set.residue);
        std::cout << "imfs: " << set.imfs.size() << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    } catch (const ewt::io_error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const ewt::numeric_error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    }
    return 0;
}
