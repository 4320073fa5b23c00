#include "gpmix/cavity_modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpmix/constants.hpp"

namespace gpmix::modes {

namespace {

void require_valid(const ModeIndex& idx) {
    if (!is_valid_te_mode(idx)) {
        throw std::domain_error("invalid TE mode index (" + std::to_string(idx.m) + "," +
                                std::to_string(idx.n) + "," + std::to_string(idx.p) + ")");
    }
}

void require_inside(const CavityGeometry& geom, const Eigen::Vector3d& pos) {
    if (pos.x() < 0.0 || pos.x() > geom.lx || pos.y() < 0.0 || pos.y() > geom.ly ||
        pos.z() < 0.0 || pos.z() > geom.lz) {
        throw std::domain_error("field point lies outside the cavity box");
    }
}

// Unnormalized transverse amplitude a = (k_y, -k_x, 0).
Eigen::Vector3d te_amplitude(const Eigen::Vector3d& k) { return {k.y(), -k.x(), 0.0}; }

// 1-D factors of the normalization integral: for a cos^2(q pi r/L) factor the
// integral over [0,L] is L (q = 0) or L/2; for sin^2 it is 0 (q = 0) or L/2.
double cos2_integral(int q, double len) { return q == 0 ? len : 0.5 * len; }
double sin2_integral(int q, double len) { return q == 0 ? 0.0 : 0.5 * len; }

}  // namespace

CavityGeometry cubic_geometry_for_sum_frequency(double f_hz) {
    if (!(f_hz > 0.0)) throw ConfigError("target frequency must be positive");
    const double side =
        kSpeedOfLight * (std::sqrt(3.0) + std::sqrt(6.0)) / (2.0 * f_hz);
    return {side, side, side};
}

bool is_valid_te_mode(const ModeIndex& idx) {
    if (idx.m < 0 || idx.n < 0 || idx.p < 1) return false;
    // p >= 1 guaranteed; the field is nontrivial iff the transverse amplitude
    // (k_y, -k_x, 0) is nonzero, and at most one index may vanish.
    return idx.m > 0 || idx.n > 0;
}

Eigen::Vector3d wavevector(const CavityGeometry& geom, const ModeIndex& idx) {
    require_valid(idx);
    validate(geom);
    return {idx.m * kPi / geom.lx, idx.n * kPi / geom.ly, idx.p * kPi / geom.lz};
}

double mode_frequency(const CavityGeometry& geom, const ModeIndex& idx) {
    return kSpeedOfLight * wavevector(geom, idx).norm();
}

double mode_normalization(const CavityGeometry& geom, const ModeIndex& idx) {
    const Eigen::Vector3d k = wavevector(geom, idx);
    const Eigen::Vector3d a = te_amplitude(k);
    const int q[3] = {idx.m, idx.n, idx.p};
    const double len[3] = {geom.lx, geom.ly, geom.lz};
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        double piece = a[i] * a[i] * cos2_integral(q[i], len[i]);
        for (int j = 0; j < 3; ++j) {
            if (j != i) piece *= sin2_integral(q[j], len[j]);
        }
        total += piece;
    }
    if (!(total > 0.0)) throw std::domain_error("mode field is identically zero");
    return 1.0 / std::sqrt(total);
}

Eigen::Vector3d te_mode_field(const CavityGeometry& geom, const ModeIndex& idx,
                              const Eigen::Vector3d& pos) {
    require_inside(geom, pos);
    const Eigen::Vector3d k = wavevector(geom, idx);
    const Eigen::Vector3d a = te_amplitude(k);
    const double norm = mode_normalization(geom, idx);
    const double c[3] = {std::cos(k.x() * pos.x()), std::cos(k.y() * pos.y()),
                         std::cos(k.z() * pos.z())};
    const double s[3] = {std::sin(k.x() * pos.x()), std::sin(k.y() * pos.y()),
                         std::sin(k.z() * pos.z())};
    Eigen::Vector3d u;
    for (int i = 0; i < 3; ++i) {
        double value = a[i] * c[i];
        for (int j = 0; j < 3; ++j) {
            if (j != i) value *= s[j];
        }
        u[i] = norm * value;
    }
    return u;
}

Eigen::Vector3d te_mode_curl(const CavityGeometry& geom, const ModeIndex& idx,
                             const Eigen::Vector3d& pos) {
    require_inside(geom, pos);
    const Eigen::Vector3d k = wavevector(geom, idx);
    const Eigen::Vector3d b = k.cross(te_amplitude(k));
    const double norm = mode_normalization(geom, idx);
    const double c[3] = {std::cos(k.x() * pos.x()), std::cos(k.y() * pos.y()),
                         std::cos(k.z() * pos.z())};
    const double s[3] = {std::sin(k.x() * pos.x()), std::sin(k.y() * pos.y()),
                         std::sin(k.z() * pos.z())};
    Eigen::Vector3d curl;
    for (int i = 0; i < 3; ++i) {
        double value = b[i] * s[i];
        for (int j = 0; j < 3; ++j) {
            if (j != i) value *= c[j];
        }
        curl[i] = norm * value;
    }
    return curl;
}

std::vector<ModeIndex> enumerate_modes(const CavityGeometry& geom, int index_cap) {
    validate(geom);
    if (index_cap < 0) throw ConfigError("mode index cap must be non-negative");
    std::vector<ModeIndex> out;
    for (int m = 0; m <= index_cap; ++m) {
        for (int n = 0; n <= index_cap; ++n) {
            for (int p = 0; p <= index_cap; ++p) {
                const ModeIndex idx{m, n, p};
                if (is_valid_te_mode(idx)) out.push_back(idx);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const ModeIndex& a, const ModeIndex& b) {
        const double fa = mode_frequency(geom, a);
        const double fb = mode_frequency(geom, b);
        if (fa != fb) return fa < fb;
        return a < b;
    });
    return out;
}

}  // namespace gpmix::modes
