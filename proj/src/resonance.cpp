#include "gpmix/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace gpmix::resonance {

namespace {

double sinc(double x) {
    if (std::fabs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

std::vector<ResonantPair> find_resonant_pairs(const CavityGeometry& geom, double omega_gw,
                                              int index_cap, double tol_rel) {
    if (!(omega_gw > 0.0)) throw ConfigError("resonance search requires a positive frequency");
    if (index_cap < 1) throw ConfigError("resonance search requires index_cap >= 1");
    if (!(tol_rel >= 0.0)) throw ConfigError("resonance tolerance must be non-negative");

    const auto all = modes::enumerate_modes(geom, index_cap);
    std::vector<double> freq(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) freq[i] = modes::mode_frequency(geom, all[i]);

    const double tol = tol_rel * omega_gw;
    std::vector<ResonantPair> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            const double delta = freq[i] + freq[j] - omega_gw;
            if (std::fabs(delta) <= tol) {
                ResonantPair pair;
                pair.alpha = std::min(all[i], all[j]);
                pair.beta = std::max(all[i], all[j]);
                pair.omega_alpha = pair.alpha == all[i] ? freq[i] : freq[j];
                pair.omega_beta = pair.beta == all[j] ? freq[j] : freq[i];
                pair.delta = delta;
                out.push_back(pair);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ResonantPair& a, const ResonantPair& b) {
        const double da = std::fabs(a.delta);
        const double db = std::fabs(b.delta);
        if (da != db) return da < db;
        return std::tie(a.alpha, a.beta) < std::tie(b.alpha, b.beta);
    });
    return out;
}

PhaseMismatch phase_mismatch(const CavityGeometry& geom, const Eigen::Vector3d& K,
                             const Eigen::Vector3d& k_alpha, const Eigen::Vector3d& k_beta) {
    PhaseMismatch result;
    const double len[3] = {geom.lx, geom.ly, geom.lz};
    result.suppression = 1.0;
    for (int i = 0; i < 3; ++i) {
        double best = std::fabs(K[i] + k_alpha[i] + k_beta[i]);
        for (int sa = -1; sa <= 1; sa += 2) {
            for (int sb = -1; sb <= 1; sb += 2) {
                best = std::min(best, std::fabs(K[i] + sa * k_alpha[i] + sb * k_beta[i]));
            }
        }
        result.delta_k[i] = best;
        result.suppression *= std::fabs(sinc(best * len[i]));
    }
    return result;
}

std::vector<std::vector<ResonantPair>> degenerate_groups(const std::vector<ResonantPair>& pairs,
                                                         double omega_gw, double freq_tol_rel) {
    const double tol = freq_tol_rel * omega_gw;
    std::vector<std::vector<ResonantPair>> groups;
    for (const auto& pair : pairs) {
        bool placed = false;
        for (auto& group : groups) {
            if (std::fabs(pair.omega_alpha - group.front().omega_alpha) <= tol &&
                std::fabs(pair.omega_beta - group.front().omega_beta) <= tol) {
                group.push_back(pair);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({pair});
    }
    return groups;
}

BrightDark bright_dark_decomposition(const std::vector<double>& couplings) {
    const int n = static_cast<int>(couplings.size());
    if (n == 0) throw ConfigError("bright/dark decomposition requires at least one coupling");
    Eigen::VectorXd g(n);
    for (int i = 0; i < n; ++i) g[i] = couplings[i];
    const double gnorm = g.norm();
    if (!(gnorm > 0.0)) {
        throw ConfigError("bright/dark decomposition requires a nonzero coupling vector");
    }

    BrightDark result;
    result.g_norm = gnorm;
    result.basis.resize(n, n);
    result.basis.row(0) = g.transpose() / gnorm;

    int rows = 1;
    for (int seed = 0; seed < n && rows < n; ++seed) {
        Eigen::VectorXd cand = Eigen::VectorXd::Zero(n);
        cand[seed] = 1.0;
        for (int r = 0; r < rows; ++r) {
            cand -= result.basis.row(r).dot(cand) * result.basis.row(r).transpose();
        }
        const double nrm = cand.norm();
        if (nrm > 1e-8) {
            result.basis.row(rows++) = cand.transpose() / nrm;
        }
    }
    if (rows != n) {
        throw NumericalError("bright/dark decomposition failed to complete a basis");
    }
    return result;
}

}  // namespace gpmix::resonance
