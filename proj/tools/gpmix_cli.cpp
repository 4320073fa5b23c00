// gpmix command-line front end: scenario-driven simulation of resonant
// graviton-photon three-wave mixing in a rectangular microwave cavity.
//
// Verbs: modes, resonance, overlap, evolve, sweep, semiclassical.
// Exit codes: 0 success, 2 configuration/usage error, 3 numerical
// non-convergence, 4 resource cap exceeded.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpmix/analytics.hpp"
#include "gpmix/cavity_modes.hpp"
#include "gpmix/constants.hpp"
#include "gpmix/coupling.hpp"
#include "gpmix/csv.hpp"
#include "gpmix/errors.hpp"
#include "gpmix/evolution.hpp"
#include "gpmix/gw_tensors.hpp"
#include "gpmix/overlap.hpp"
#include "gpmix/resonance.hpp"
#include "gpmix/scenario.hpp"
#include "gpmix/version.hpp"

namespace {

using namespace gpmix;

struct GlobalOptions {
    std::string scenario_path;
    std::string out_dir;
    int threads = 0;
    int quad_order = 0;
};

io::Scenario load_required_scenario(const GlobalOptions& opts) {
    if (opts.scenario_path.empty()) {
        throw ConfigError("this verb requires --scenario <path>");
    }
    io::Scenario sc = io::load_scenario(opts.scenario_path);
    if (opts.quad_order > 0) sc.quad.order = opts.quad_order;
    return sc;
}

// Writes `text` to <out_dir>/<name> when an output directory was given, and
// to stdout otherwise.
void emit(const GlobalOptions& opts, const std::string& name, const std::string& text) {
    if (opts.out_dir.empty()) {
        std::cout << text;
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(opts.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + opts.out_dir);
    const std::string path = opts.out_dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// Shared pipeline: scenario -> wave tensors -> working mode multiplet with
// overlaps and couplings.

struct WaveSetup {
    Eigen::Vector3d khat;
    Eigen::Vector3d K;      // (Omega/c) khat
    Eigen::Matrix3d e;
};

WaveSetup wave_setup(const io::Scenario& sc) {
    WaveSetup ws;
    ws.khat = gw::propagation_direction(sc.theta, sc.phi);
    ws.K = (sc.omega_gw / kSpeedOfLight) * ws.khat;
    ws.e = gw::polarization_tensor(ws.khat, sc.polarization);
    return ws;
}

struct Selection {
    std::vector<resonance::ResonantPair> members;    // working multiplet
    std::vector<resonance::ResonantPair> all_pairs;  // everything found
};

Selection select_modes(const io::Scenario& sc) {
    Selection sel;
    if (sc.auto_resonant) {
        sel.all_pairs = resonance::find_resonant_pairs(sc.geom, sc.omega_gw, sc.index_cap,
                                                       sc.resonance_tol_rel);
        if (sel.all_pairs.empty()) {
            throw ConfigError(
                "no resonant mode pairs within tolerance; adjust gw.frequency_ghz, "
                "modes.index_cap, or modes.resonance_tol_rel");
        }
        sel.members = resonance::degenerate_groups(sel.all_pairs, sc.omega_gw).front();
    } else {
        resonance::ResonantPair pair;
        pair.alpha = std::min(sc.alpha, sc.beta);
        pair.beta = std::max(sc.alpha, sc.beta);
        pair.omega_alpha = modes::mode_frequency(sc.geom, pair.alpha);
        pair.omega_beta = modes::mode_frequency(sc.geom, pair.beta);
        pair.delta = pair.omega_alpha + pair.omega_beta - sc.omega_gw;
        sel.members = {pair};
        sel.all_pairs = {pair};
    }
    return sel;
}

struct CoupledModes {
    Selection sel;
    WaveSetup wave;
    std::vector<gw::OverlapResult> overlaps;  // corner origin, per member
    std::vector<double> g;                    // rad/s, per member
    double g_bright = 0.0;                    // |g|
};

gw::OverlapResult overlap_for_pair(const io::Scenario& sc, const WaveSetup& wave,
                                   const resonance::ResonantPair& pair,
                                   const Eigen::Vector3d& origin) {
    const gw::OverlapResult res = gw::overlap_integral(sc.geom, pair.alpha, pair.beta, wave.K,
                                                       wave.e, origin, sc.quad);
    if (!res.converged) {
        throw NumericalError("overlap quadrature did not converge at order " +
                             std::to_string(res.order_used) +
                             "; raise quad.order or quad.max_doublings");
    }
    return res;
}

CoupledModes couple_modes(const io::Scenario& sc) {
    CoupledModes cm;
    cm.sel = select_modes(sc);
    cm.wave = wave_setup(sc);
    const double c_g = gw::coupling_normalization(sc.omega_gw, sc.geom.volume());
    const Eigen::Vector3d corner = Eigen::Vector3d::Zero();
    double norm2 = 0.0;
    for (const auto& pair : cm.sel.members) {
        const gw::OverlapResult res = overlap_for_pair(sc, cm.wave, pair, corner);
        cm.overlaps.push_back(res);
        cm.g.push_back(gw::coupling_strength(pair.omega_alpha, pair.omega_beta, c_g, res.abs()));
        norm2 += cm.g.back() * cm.g.back();
    }
    cm.g_bright = std::sqrt(norm2);
    if (!(cm.g_bright > 0.0)) {
        throw ConfigError("all mode couplings vanish for this scenario; the bright mode "
                          "is undefined");
    }
    return cm;
}

fock::QuantumState initial_state(const io::Scenario& sc) {
    switch (sc.graviton_kind) {
        case io::GravitonKind::vacuum:
            return fock::basis_state(0, sc.alpha_fock, sc.c_fock);
        case io::GravitonKind::fock:
            return fock::basis_state(static_cast<std::int64_t>(sc.graviton_n), sc.alpha_fock,
                                     sc.c_fock);
        case io::GravitonKind::coherent: {
            const double eta = std::sqrt(sc.graviton_n);
            const std::int64_t cutoff =
                sc.coherent_cutoff >= 0
                    ? sc.coherent_cutoff
                    : static_cast<std::int64_t>(std::ceil(eta * eta + 6.0 * eta));
            return fock::coherent_graviton_state(eta, cutoff, sc.alpha_fock, sc.c_fock);
        }
    }
    throw ConfigError("unreachable graviton kind");
}

std::vector<double> tau_grid(const io::Scenario& sc) {
    std::vector<double> taus(sc.time_points);
    const int div = std::max(sc.time_points - 1, 1);
    for (int i = 0; i < sc.time_points; ++i) taus[i] = sc.tau_max * i / div;
    return taus;
}

// ---------------------------------------------------------------------------
// Verbs.

int cmd_modes(const GlobalOptions& opts, double cubic_f_ghz, int max_index) {
    modes::CavityGeometry geom;
    int cap = max_index;
    std::uint64_t hash = 0;
    if (!opts.scenario_path.empty()) {
        const io::Scenario sc = load_required_scenario(opts);
        geom = sc.geom;
        if (cap < 0) cap = sc.index_cap;  // not set on the command line
        hash = sc.file_hash;
    } else {
        if (!(cubic_f_ghz > 0.0)) {
            throw ConfigError("modes requires --scenario or a positive --cubic-f-ghz");
        }
        geom = modes::cubic_geometry_for_sum_frequency(cubic_f_ghz * 1e9);
    }
    if (cap < 1) cap = 4;

    const auto list = modes::enumerate_modes(geom, cap);
    io::Table table;
    table.columns = {"m", "n", "p", "frequency_ghz"};
    table.data.assign(4, {});
    for (const auto& idx : list) {
        table.data[0].push_back(idx.m);
        table.data[1].push_back(idx.n);
        table.data[2].push_back(idx.p);
        table.data[3].push_back(modes::mode_frequency(geom, idx) / (2.0 * kPi * 1e9));
    }
    io::OutputMeta meta;
    meta.scenario_hash = hash;
    emit(opts, "modes.csv", io::csv_to_string(table, meta));
    return 0;
}

int cmd_resonance(const GlobalOptions& opts) {
    const io::Scenario sc = load_required_scenario(opts);
    const Selection sel = select_modes(sc);
    const WaveSetup wave = wave_setup(sc);
    const double c_g = gw::coupling_normalization(sc.omega_gw, sc.geom.volume());
    const Eigen::Vector3d corner = Eigen::Vector3d::Zero();

    io::Table table;
    table.columns = {"m_alpha", "n_alpha", "p_alpha", "m_beta",  "n_beta", "p_beta",
                     "omega_alpha_rad_per_s", "omega_beta_rad_per_s", "delta_rad_per_s",
                     "abs_A", "g_rad_per_s"};
    table.data.assign(table.columns.size(), {});
    for (const auto& pair : sel.all_pairs) {
        const gw::OverlapResult res = overlap_for_pair(sc, wave, pair, corner);
        const double g = gw::coupling_strength(pair.omega_alpha, pair.omega_beta, c_g, res.abs());
        std::size_t c = 0;
        table.data[c++].push_back(pair.alpha.m);
        table.data[c++].push_back(pair.alpha.n);
        table.data[c++].push_back(pair.alpha.p);
        table.data[c++].push_back(pair.beta.m);
        table.data[c++].push_back(pair.beta.n);
        table.data[c++].push_back(pair.beta.p);
        table.data[c++].push_back(pair.omega_alpha);
        table.data[c++].push_back(pair.omega_beta);
        table.data[c++].push_back(pair.delta);
        table.data[c++].push_back(res.abs());
        table.data[c++].push_back(g);
    }
    io::OutputMeta meta;
    meta.scenario_hash = sc.file_hash;
    emit(opts, "resonance.csv", io::csv_to_string(table, meta));
    return 0;
}

int cmd_overlap(const GlobalOptions& opts) {
    const io::Scenario sc = load_required_scenario(opts);
    const Selection sel = select_modes(sc);
    const WaveSetup wave = wave_setup(sc);
    const Eigen::Vector3d corner = Eigen::Vector3d::Zero();
    const Eigen::Vector3d center(0.5 * sc.geom.lx, 0.5 * sc.geom.ly, 0.5 * sc.geom.lz);

    io::Table table;
    table.columns = {"m_beta", "n_beta", "p_beta", "re_A_corner", "im_A_corner",
                     "abs_A_corner", "re_A_center", "im_A_center", "abs_A_center",
                     "quad_order"};
    table.data.assign(table.columns.size(), {});
    for (const auto& pair : sel.members) {
        const gw::OverlapResult at_corner = overlap_for_pair(sc, wave, pair, corner);
        const gw::OverlapResult at_center = overlap_for_pair(sc, wave, pair, center);
        std::size_t c = 0;
        table.data[c++].push_back(pair.beta.m);
        table.data[c++].push_back(pair.beta.n);
        table.data[c++].push_back(pair.beta.p);
        table.data[c++].push_back(at_corner.value.real());
        table.data[c++].push_back(at_corner.value.imag());
        table.data[c++].push_back(at_corner.abs());
        table.data[c++].push_back(at_center.value.real());
        table.data[c++].push_back(at_center.value.imag());
        table.data[c++].push_back(at_center.abs());
        table.data[c++].push_back(at_corner.order_used);
    }
    io::OutputMeta meta;
    meta.scenario_hash = sc.file_hash;
    emit(opts, "overlap.csv", io::csv_to_string(table, meta));
    return 0;
}

// Index of the first local maximum of `y` (first interior point not exceeded
// by either neighbor, having risen from the left); falls back to the global
// argmax when the series only rises.
std::size_t first_peak_index(const std::vector<double>& y) {
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] >= y[i - 1] && y[i] >= y[i + 1] && y[i] > y[0]) return i;
    }
    return std::max_element(y.begin(), y.end()) - y.begin();
}

int cmd_evolve(const GlobalOptions& opts) {
    const io::Scenario sc = load_required_scenario(opts);
    const CoupledModes cm = couple_modes(sc);
    const fock::QuantumState psi0 = initial_state(sc);
    const std::vector<double> taus = tau_grid(sc);

    // The physical detuning of an auto-resonant multiplet is zero by
    // construction; evolution runs in dimensionless time tau = g_bright t
    // with unit coupling.
    fock::EvolveOptions eopts;
    eopts.sector_dim_cap = sc.sector_dim_cap;
    const fock::EvolveResult res = fock::evolve(psi0, 1.0, 0.0, taus, eopts);

    const double n_pump0 =
        sc.graviton_kind == io::GravitonKind::vacuum ? 0.0 : sc.graviton_n;
    const double n_alpha0 = static_cast<double>(sc.alpha_fock);

    io::Table table;
    table.columns = {"tau",     "n_b",    "n_alpha", "n_c",     "n_beta1",
                     "n_beta2", "n_beta3", "purity", "entropy", "n_c_semiclassical"};
    table.data.assign(table.columns.size(), {});
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const auto split = fock::member_occupations(res.series.n_c[i], cm.g);
        std::size_t c = 0;
        table.data[c++].push_back(taus[i]);
        table.data[c++].push_back(res.series.n_b[i]);
        table.data[c++].push_back(res.series.n_alpha[i]);
        table.data[c++].push_back(res.series.n_c[i]);
        for (std::size_t k = 0; k < 3; ++k) {
            table.data[c++].push_back(k < split.size() ? split[k] : 0.0);
        }
        table.data[c++].push_back(res.series.purity[i]);
        table.data[c++].push_back(res.series.entropy[i]);
        table.data[c++].push_back(
            analytics::semiclassical_n_c(std::sqrt(n_pump0) * taus[i], n_alpha0));
    }
    io::OutputMeta meta;
    meta.scenario_hash = sc.file_hash;
    emit(opts, "evolve.csv", io::csv_to_string(table, meta));

    // JSON summary: conservation-drift maxima, peak conversion, first-peak
    // time, minimum purity.
    double max_norm = 0.0, max_m = 0.0, max_n = 0.0, min_purity = 1.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        max_norm = std::max(max_norm, std::fabs(res.series.norm_drift[i]));
        max_m = std::max(max_m, std::fabs(res.series.m_drift[i]));
        max_n = std::max(max_n, std::fabs(res.series.n_drift[i]));
        min_purity = std::min(min_purity, res.series.purity[i]);
    }
    const std::size_t peak = first_peak_index(res.series.n_c);
    nlohmann::ordered_json summary;
    summary["tool_version"] = std::string(kVersion);
    summary["scenario_hash"] = hash_hex(sc.file_hash);
    summary["g_bright_rad_per_s"] = cm.g_bright;
    summary["member_abs_A"] = [&] {
        std::vector<double> a;
        for (const auto& res_i : cm.overlaps) a.push_back(res_i.abs());
        return a;
    }();
    summary["max_norm_drift"] = max_norm;
    summary["max_m_drift"] = max_m;
    summary["max_n_drift"] = max_n;
    summary["peak_n_c"] = res.series.n_c.empty() ? 0.0 : res.series.n_c[peak];
    summary["tau_first_peak"] = taus.empty() ? 0.0 : taus[peak];
    summary["min_purity"] = min_purity;
    const std::string summary_text = summary.dump(2) + "\n";
    if (opts.out_dir.empty()) {
        std::cerr << summary_text;
    } else {
        emit(opts, "evolve_summary.json", summary_text);
    }
    return 0;
}

int cmd_sweep(const GlobalOptions& opts) {
    const io::Scenario sc = load_required_scenario(opts);
    if (sc.sweep_alpha_fock.empty()) {
        throw ConfigError("sweep requires sweep.alpha_fock_values in the scenario");
    }
    const std::vector<double> taus = tau_grid(sc);
    fock::EvolveOptions eopts;
    eopts.sector_dim_cap = sc.sector_dim_cap;

    io::Table table;
    table.columns = {"alpha_fock", "tau", "n_b", "n_alpha", "n_c", "purity", "entropy"};
    table.data.assign(table.columns.size(), {});
    for (const std::int64_t seed_alpha : sc.sweep_alpha_fock) {
        io::Scenario variant = sc;
        variant.alpha_fock = seed_alpha;
        const fock::QuantumState psi0 = initial_state(variant);
        const fock::EvolveResult res = fock::evolve(psi0, 1.0, 0.0, taus, eopts);
        for (std::size_t i = 0; i < taus.size(); ++i) {
            std::size_t c = 0;
            table.data[c++].push_back(static_cast<double>(seed_alpha));
            table.data[c++].push_back(taus[i]);
            table.data[c++].push_back(res.series.n_b[i]);
            table.data[c++].push_back(res.series.n_alpha[i]);
            table.data[c++].push_back(res.series.n_c[i]);
            table.data[c++].push_back(res.series.purity[i]);
            table.data[c++].push_back(res.series.entropy[i]);
        }
    }
    io::OutputMeta meta;
    meta.scenario_hash = sc.file_hash;
    emit(opts, "sweep.csv", io::csv_to_string(table, meta));
    return 0;
}

int cmd_semiclassical(const GlobalOptions& opts) {
    const io::Scenario sc = load_required_scenario(opts);
    const double n_pump0 =
        sc.graviton_kind == io::GravitonKind::vacuum ? 0.0 : sc.graviton_n;
    const std::vector<double> taus = tau_grid(sc);

    io::Table table;
    table.columns = {"tau", "r", "n_per_mode", "n_total"};
    table.data.assign(table.columns.size(), {});
    for (const double tau : taus) {
        const double r = std::sqrt(n_pump0) * tau;
        table.data[0].push_back(tau);
        table.data[1].push_back(r);
        table.data[2].push_back(analytics::semiclassical_n_c(r));
        table.data[3].push_back(analytics::semiclassical_pair_total(r));
    }
    io::OutputMeta meta;
    meta.scenario_hash = sc.file_hash;
    emit(opts, "semiclassical.csv", io::csv_to_string(table, meta));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gpmix: graviton-photon three-wave mixing in a microwave cavity"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--scenario", opts.scenario_path, "Scenario file path");
    app.add_option("--out", opts.out_dir, "Output directory (default: stdout)");
    app.add_option("--threads", opts.threads, "OpenMP thread count (0 = runtime default)");
    app.add_option("--quad-order", opts.quad_order,
                   "Override the starting quadrature order from the scenario");

    app.fallthrough();

    double cubic_f_ghz = 0.0;
    int max_index = -1;
    CLI::App* modes_cmd =
        app.add_subcommand("modes", "List TE modes sorted by frequency");
    modes_cmd->add_option("--cubic-f-ghz", cubic_f_ghz,
                          "Cubic cavity tuned so the two lowest families sum to this");
    modes_cmd->add_option("--max-index", max_index, "Largest mode index to enumerate");

    CLI::App* resonance_cmd = app.add_subcommand(
        "resonance", "Find resonant mode pairs with overlaps and couplings");
    CLI::App* overlap_cmd = app.add_subcommand(
        "overlap", "Overlap integrals of the working multiplet for both origins");
    CLI::App* evolve_cmd =
        app.add_subcommand("evolve", "Evolve the scenario state; CSV series + JSON summary");
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Evolve across sweep.alpha_fock_values; long-format CSV");
    CLI::App* semiclassical_cmd = app.add_subcommand(
        "semiclassical", "Undepleted-pump squeezing reference curves");
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (opts.threads > 0) omp_set_num_threads(opts.threads);
        if (modes_cmd->parsed()) return cmd_modes(opts, cubic_f_ghz, max_index);
        if (resonance_cmd->parsed()) return cmd_resonance(opts);
        if (overlap_cmd->parsed()) return cmd_overlap(opts);
        if (evolve_cmd->parsed()) return cmd_evolve(opts);
        if (sweep_cmd->parsed()) return cmd_sweep(opts);
        if (semiclassical_cmd->parsed()) return cmd_semiclassical(opts);
        throw ConfigError("no verb given");
    } catch (const ResourceCapError& e) {
        std::cerr << "error (resource cap): " << e.what() << '\n';
        return 4;
    } catch (const NumericalError& e) {
        std::cerr << "error (numerics): " << e.what() << '\n';
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error (config): " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error (config): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
