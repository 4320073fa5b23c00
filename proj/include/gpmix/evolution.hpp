#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "gpmix/fock.hpp"

namespace gpmix::fock {

// State vector for the three-mode problem, stored blockwise over the
// conserved-charge sectors (M, N) it has support on. Relative phases between
// blocks are retained so reduced density matrices across sectors are exact.
struct SectorBlock {
    FockSector sector;
    Eigen::VectorXcd amp;
};

struct QuantumState {
    std::vector<SectorBlock> blocks;  // sorted by (M, N)

    double norm() const;
};

// |n_b, n_alpha, n_c>.
QuantumState basis_state(std::int64_t n_b, std::int64_t n_alpha, std::int64_t n_c);

// Coherent pump state |eta>_b (eta real, >= 0) times the photon Fock state
// |n_alpha0, n_c0>, truncated at pump occupation `cutoff`. Amplitudes are
// computed in log space so large eta is stable. Throws ConfigError when
// cutoff < eta^2 + 6 eta (the message names the required cutoff); with that
// margin the truncated tail mass is below 1e-10.
QuantumState coherent_graviton_state(double eta, std::int64_t cutoff,
                                     std::int64_t n_alpha0 = 0, std::int64_t n_c0 = 0);

struct Occupations {
    double n_b = 0.0;
    double n_alpha = 0.0;
    double n_c = 0.0;
};

Occupations occupations(const QuantumState& state);

// Reduced density matrix of the photon pair (n_alpha, n_c) after tracing out
// the pump mode. `em_basis` lists the (n_alpha, n_c) pairs, sorted
// lexicographically, indexing rows/columns of rho.
struct ReducedDensity {
    Eigen::MatrixXcd rho;
    std::vector<std::pair<std::int64_t, std::int64_t>> em_basis;
};

ReducedDensity reduced_em_density(const QuantumState& state);

double purity_of(const Eigen::MatrixXcd& rho);
double entropy_of(const Eigen::MatrixXcd& rho);  // von Neumann, natural log

// Mean occupation of each member mode of a degenerate multiplet: the
// conversion-mode population n_c splits as n_beta,i = (g_i/|g|)^2 n_c.
std::vector<double> member_occupations(double n_c, const std::vector<double>& couplings);

struct ObservableSeries {
    std::vector<double> t;         // evolution times as passed in
    std::vector<double> n_b;
    std::vector<double> n_alpha;
    std::vector<double> n_c;
    std::vector<double> purity;
    std::vector<double> entropy;
    std::vector<double> norm_drift;  // |<psi|psi>| - 1
    std::vector<double> m_drift;     // <M>(t) - <M>(0)
    std::vector<double> n_drift;     // <N>(t) - <N>(0)
};

struct EvolveOptions {
    std::int64_t sector_dim_cap = 50000;  // throws ResourceCapError if exceeded
    bool track_purity = true;
};

struct EvolveResult {
    ObservableSeries series;
    QuantumState final_state;
};

// Evolves under H/hbar = g (b a^dag c^dag + h.c.) + delta n_b per sector via
// eigendecomposition, exactly (no time stepping error). The OpenMP kernel
// parallelizes over sector eigendecompositions and over time indices with
// per-index storage, so results are byte-identical for every thread count;
// evolve_serial is the plain serial reference kept for testing.
EvolveResult evolve(const QuantumState& initial, double g, double delta,
                    const std::vector<double>& times, const EvolveOptions& opts = {});

EvolveResult evolve_serial(const QuantumState& initial, double g, double delta,
                           const std::vector<double>& times, const EvolveOptions& opts = {});

}  // namespace gpmix::fock
