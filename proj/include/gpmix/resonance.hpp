#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gpmix/cavity_modes.hpp"

namespace gpmix::resonance {

using modes::CavityGeometry;
using modes::ModeIndex;

// A mode pair satisfying the two-photon resonance condition
// omega_alpha + omega_beta = omega_gw up to detuning delta.
struct ResonantPair {
    ModeIndex alpha;   // lexicographically smaller index of the pair
    ModeIndex beta;
    double omega_alpha = 0.0;
    double omega_beta = 0.0;
    double delta = 0.0;  // omega_alpha + omega_beta - omega_gw (rad/s)
};

// Scans all valid TE modes with indices <= index_cap and returns the pairs
// with |delta| <= tol_rel * omega_gw, sorted by |delta| ascending with
// lexicographic (alpha, beta) tie-break. Each unordered pair appears once,
// with alpha <= beta lexicographically.
std::vector<ResonantPair> find_resonant_pairs(const CavityGeometry& geom, double omega_gw,
                                              int index_cap = 8, double tol_rel = 1e-9);

// Momentum-mismatch diagnostic for a pair: for each Cartesian component the
// minimum of |K_i +- k_a,i +- k_b,i| over the four sign choices, plus a
// sinc-envelope suppression score prod_i |sinc(dk_i L_i)| (sinc x = sin(x)/x).
struct PhaseMismatch {
    Eigen::Vector3d delta_k;
    double suppression = 0.0;
};

PhaseMismatch phase_mismatch(const CavityGeometry& geom, const Eigen::Vector3d& K,
                             const Eigen::Vector3d& k_alpha, const Eigen::Vector3d& k_beta);

// Groups resonant pairs whose (omega_alpha, omega_beta) agree within
// freq_tol_rel * omega_gw. Group order follows the input pair order; each
// group keeps its members in input order.
std::vector<std::vector<ResonantPair>> degenerate_groups(const std::vector<ResonantPair>& pairs,
                                                         double omega_gw,
                                                         double freq_tol_rel = 1e-9);

// Orthonormal bright/dark basis for a degenerate multiplet with coupling
// vector (g_1..g_n): row 0 of `basis` is g/|g| (the bright combination), the
// remaining rows are dark combinations obtained by Gram-Schmidt on canonical
// seed vectors, skipping seeds whose residual norm is below 1e-8.
// Throws ConfigError if all couplings are zero.
struct BrightDark {
    Eigen::MatrixXd basis;   // n x n, rows orthonormal
    double g_norm = 0.0;     // |g|
};

BrightDark bright_dark_decomposition(const std::vector<double>& couplings);

}  // namespace gpmix::resonance
