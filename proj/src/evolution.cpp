#include "gpmix/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "gpmix/errors.hpp"

namespace gpmix::fock {

namespace {

using std::complex;

struct BlockEigen {
    const SectorBlock* block = nullptr;
    Eigen::MatrixXcd vecs;  // eigenvectors (real, stored complex for matvecs)
    Eigen::VectorXd vals;
    Eigen::VectorXcd c0;    // eigenbasis amplitudes at t = 0
};

Eigen::VectorXcd amp_at(const BlockEigen& be, double t) {
    const auto dim = be.vals.size();
    Eigen::VectorXcd phased(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        phased[i] = std::polar(1.0, -be.vals[i] * t) * be.c0[i];
    }
    return be.vecs * phased;
}

struct Snapshot {
    double n_b = 0.0;
    double n_alpha = 0.0;
    double n_c = 0.0;
    double norm2 = 0.0;
    double m_mean = 0.0;
    double n_mean = 0.0;
    double purity = 1.0;
    double entropy = 0.0;
};

Snapshot measure(const QuantumState& state, bool with_purity) {
    Snapshot snap;
    for (const auto& block : state.blocks) {
        for (Eigen::Index i = 0; i < block.amp.size(); ++i) {
            const double w = std::norm(block.amp[i]);
            const FockTriple& t = block.sector.basis[static_cast<std::size_t>(i)];
            snap.n_b += w * static_cast<double>(t.n_b);
            snap.n_alpha += w * static_cast<double>(t.n_alpha);
            snap.n_c += w * static_cast<double>(t.n_c);
            snap.norm2 += w;
            snap.m_mean += w * static_cast<double>(block.sector.M);
            snap.n_mean += w * static_cast<double>(block.sector.N);
        }
    }
    if (with_purity) {
        const ReducedDensity red = reduced_em_density(state);
        snap.purity = purity_of(red.rho);
        snap.entropy = entropy_of(red.rho);
    }
    return snap;
}

EvolveResult run_evolve(const QuantumState& initial, double g, double delta,
                        const std::vector<double>& times, const EvolveOptions& opts,
                        bool parallel) {
    for (const auto& block : initial.blocks) {
        if (block.sector.dim() > opts.sector_dim_cap) {
            throw ResourceCapError("sector (M=" + std::to_string(block.sector.M) +
                                   ", N=" + std::to_string(block.sector.N) + ") has dimension " +
                                   std::to_string(block.sector.dim()) +
                                   " exceeding the cap of " +
                                   std::to_string(opts.sector_dim_cap));
        }
    }

    const int n_blocks = static_cast<int>(initial.blocks.size());
    std::vector<BlockEigen> eig(n_blocks);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int b = 0; b < n_blocks; ++b) {
        const SectorBlock& block = initial.blocks[b];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
            sector_hamiltonian(block.sector, g, delta));
        eig[b].block = &block;
        eig[b].vecs = solver.eigenvectors().cast<std::complex<double>>();
        eig[b].vals = solver.eigenvalues();
        eig[b].c0 = eig[b].vecs.adjoint() * block.amp;
    }

    const int n_times = static_cast<int>(times.size());
    std::vector<Snapshot> snaps(n_times);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int it = 0; it < n_times; ++it) {
        QuantumState at_t;
        at_t.blocks.reserve(n_blocks);
        for (int b = 0; b < n_blocks; ++b) {
            at_t.blocks.push_back({eig[b].block->sector, amp_at(eig[b], times[it])});
        }
        snaps[it] = measure(at_t, opts.track_purity);
    }

    EvolveResult result;
    const Snapshot start = measure(initial, false);
    auto& s = result.series;
    s.t = times;
    s.n_b.resize(n_times);
    s.n_alpha.resize(n_times);
    s.n_c.resize(n_times);
    s.purity.resize(n_times);
    s.entropy.resize(n_times);
    s.norm_drift.resize(n_times);
    s.m_drift.resize(n_times);
    s.n_drift.resize(n_times);
    for (int it = 0; it < n_times; ++it) {
        s.n_b[it] = snaps[it].n_b;
        s.n_alpha[it] = snaps[it].n_alpha;
        s.n_c[it] = snaps[it].n_c;
        s.purity[it] = snaps[it].purity;
        s.entropy[it] = snaps[it].entropy;
        s.norm_drift[it] = std::sqrt(snaps[it].norm2) - 1.0;
        s.m_drift[it] = snaps[it].m_mean - start.m_mean;
        s.n_drift[it] = snaps[it].n_mean - start.n_mean;
    }

    if (n_times == 0) {
        result.final_state = initial;
    } else {
        result.final_state.blocks.reserve(n_blocks);
        for (int b = 0; b < n_blocks; ++b) {
            result.final_state.blocks.push_back(
                {eig[b].block->sector, amp_at(eig[b], times.back())});
        }
    }
    return result;
}

}  // namespace

double QuantumState::norm() const {
    double norm2 = 0.0;
    for (const auto& block : blocks) norm2 += block.amp.squaredNorm();
    return std::sqrt(norm2);
}

QuantumState basis_state(std::int64_t n_b, std::int64_t n_alpha, std::int64_t n_c) {
    if (n_b < 0 || n_alpha < 0 || n_c < 0) {
        throw ConfigError("Fock occupations must be non-negative");
    }
    const std::int64_t M = 2 * n_b + n_alpha + n_c;
    const std::int64_t N = n_alpha - n_c;
    FockSector sector = build_sector(M, N);
    QuantumState state;
    SectorBlock block{sector, Eigen::VectorXcd::Zero(sector.dim())};
    const FockTriple target{n_b, n_alpha, n_c};
    for (std::int64_t i = 0; i < sector.dim(); ++i) {
        if (sector.basis[static_cast<std::size_t>(i)] == target) {
            block.amp[i] = 1.0;
            break;
        }
    }
    state.blocks.push_back(std::move(block));
    return state;
}

QuantumState coherent_graviton_state(double eta, std::int64_t cutoff, std::int64_t n_alpha0,
                                     std::int64_t n_c0) {
    if (eta < 0.0) throw ConfigError("coherent amplitude must be non-negative");
    if (n_alpha0 < 0 || n_c0 < 0) throw ConfigError("Fock occupations must be non-negative");
    const double required = eta * eta + 6.0 * eta;
    if (static_cast<double>(cutoff) < required) {
        throw ConfigError("coherent pump cutoff " + std::to_string(cutoff) +
                          " too small; need at least " +
                          std::to_string(static_cast<std::int64_t>(std::ceil(required))) +
                          " for |eta| = " + std::to_string(eta));
    }

    QuantumState state;
    state.blocks.reserve(static_cast<std::size_t>(cutoff) + 1);
    double norm2 = 0.0;
    for (std::int64_t n = 0; n <= cutoff; ++n) {
        const std::int64_t M = 2 * n + n_alpha0 + n_c0;
        const std::int64_t N = n_alpha0 - n_c0;
        FockSector sector = build_sector(M, N);
        SectorBlock block{sector, Eigen::VectorXcd::Zero(sector.dim())};
        double amp = 0.0;
        if (eta == 0.0) {
            amp = n == 0 ? 1.0 : 0.0;
        } else {
            const double log_amp =
                -0.5 * eta * eta + n * std::log(eta) - 0.5 * std::lgamma(n + 1.0);
            amp = std::exp(log_amp);
        }
        // |n, n_alpha0, n_c0> sits at basis position n_b_max - n = min(n_alpha0, n_c0).
        const std::int64_t pos = std::min(n_alpha0, n_c0);
        block.amp[pos] = amp;
        norm2 += amp * amp;
        state.blocks.push_back(std::move(block));
    }
    // Renormalize away the (sub-1e-10) truncated tail so downstream norm
    // drift diagnostics start exactly at zero.
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& block : state.blocks) block.amp *= scale;
    return state;
}

Occupations occupations(const QuantumState& state) {
    const Snapshot snap = measure(state, false);
    return {snap.n_b, snap.n_alpha, snap.n_c};
}

ReducedDensity reduced_em_density(const QuantumState& state) {
    // Collect the (n_alpha, n_c) pairs with support and index them.
    std::map<std::pair<std::int64_t, std::int64_t>, int> em_index;
    for (const auto& block : state.blocks) {
        for (const auto& t : block.sector.basis) {
            em_index.emplace(std::make_pair(t.n_alpha, t.n_c), 0);
        }
    }
    ReducedDensity red;
    red.em_basis.reserve(em_index.size());
    int next = 0;
    for (auto& [key, idx] : em_index) {
        idx = next++;
        red.em_basis.push_back(key);
    }

    // Group amplitudes by pump occupation and accumulate outer products.
    std::map<std::int64_t, std::vector<std::pair<int, complex<double>>>> by_pump;
    for (const auto& block : state.blocks) {
        for (Eigen::Index i = 0; i < block.amp.size(); ++i) {
            const complex<double> a = block.amp[i];
            if (a == complex<double>(0.0, 0.0)) continue;
            const FockTriple& t = block.sector.basis[static_cast<std::size_t>(i)];
            by_pump[t.n_b].push_back({em_index.at({t.n_alpha, t.n_c}), a});
        }
    }

    const int dim = next;
    red.rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [n_b, entries] : by_pump) {
        for (const auto& [ei, ai] : entries) {
            for (const auto& [ej, aj] : entries) {
                red.rho(ei, ej) += ai * std::conj(aj);
            }
        }
    }
    return red;
}

double purity_of(const Eigen::MatrixXcd& rho) { return rho.squaredNorm(); }

double entropy_of(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho,
                                                           Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()[i];
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s;
}

std::vector<double> member_occupations(double n_c, const std::vector<double>& couplings) {
    double norm2 = 0.0;
    for (double g : couplings) norm2 += g * g;
    if (!(norm2 > 0.0)) {
        throw ConfigError("member occupations require a nonzero coupling vector");
    }
    std::vector<double> out(couplings.size());
    for (std::size_t i = 0; i < couplings.size(); ++i) {
        out[i] = couplings[i] * couplings[i] / norm2 * n_c;
    }
    return out;
}

EvolveResult evolve(const QuantumState& initial, double g, double delta,
                    const std::vector<double>& times, const EvolveOptions& opts) {
    return run_evolve(initial, g, delta, times, opts, /*parallel=*/true);
}

EvolveResult evolve_serial(const QuantumState& initial, double g, double delta,
                           const std::vector<double>& times, const EvolveOptions& opts) {
    return run_evolve(initial, g, delta, times, opts, /*parallel=*/false);
}

}  // namespace gpmix::fock
