#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpmix/geometry.hpp"
#include "gpmix/gw_tensors.hpp"
#include "gpmix/overlap.hpp"

namespace gpmix::io {

// Scenario files are plain text `key = value` lines with dotted keys and
// units embedded in the key names (e.g. gw.frequency_ghz, gw.theta_pi in
// units of pi). `#` starts a comment. Parsing is strict: unknown keys,
// duplicate keys, malformed values, and missing required keys are errors.
// See docs/scenario_format.md for the full key reference.

enum class GravitonKind { vacuum, fock, coherent };

struct Scenario {
    // cavity
    modes::CavityGeometry geom;

    // gravitational wave
    double omega_gw = 0.0;      // rad/s
    double theta = 0.0;         // rad
    double phi = 0.0;           // rad
    gw::Polarization polarization = gw::Polarization::plus;
    double h_plus = 1e-21;

    // mode selection
    bool auto_resonant = true;
    modes::ModeIndex alpha;     // used when auto_resonant is false
    modes::ModeIndex beta;
    int index_cap = 8;
    double resonance_tol_rel = 1e-9;

    // initial state
    GravitonKind graviton_kind = GravitonKind::fock;
    double graviton_n = 1.0;            // fock count or coherent mean
    std::int64_t coherent_cutoff = -1;  // -1: ceil(n + 6 sqrt(n))
    std::int64_t alpha_fock = 0;
    std::int64_t c_fock = 0;

    // time grid in dimensionless tau = g t
    double tau_max = 3.0;
    int time_points = 400;

    // numerics
    gw::QuadratureSpec quad;
    std::int64_t sector_dim_cap = 50000;

    // sweep verb input
    std::vector<std::int64_t> sweep_alpha_fock;

    // provenance
    std::string source_path;
    std::uint64_t file_hash = 0;
};

Scenario load_scenario(const std::string& path);

// Parses scenario text directly (exposed for tests). `origin` labels error
// messages.
Scenario parse_scenario(const std::string& text, const std::string& origin = "<memory>");

}  // namespace gpmix::io
