#pragma once

#include <Eigen/Dense>
#include <array>

#include "gpmix/cavity_modes.hpp"
#include "gpmix/constants.hpp"
#include "gpmix/gw_tensors.hpp"

namespace gpmix::testsupport {

// Canonical benchmark configuration used across the tests: cubic cavity whose
// two lowest TE families sum to 3.9 GHz, wave incident in the xy-plane at 30
// degrees from the x-axis, plus polarization, degenerate mode triple
// (1,1,1) x {(2,1,1), (1,2,1), (1,1,2)}.
struct BenchmarkConfig {
    modes::CavityGeometry geom;
    double omega_gw = 0.0;
    Eigen::Vector3d khat;
    Eigen::Vector3d K;  // (omega/c) khat
    Eigen::Matrix3d e_plus;
    modes::ModeIndex alpha{1, 1, 1};
    std::array<modes::ModeIndex, 3> betas{{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};

    Eigen::Vector3d corner() const { return Eigen::Vector3d::Zero(); }
    Eigen::Vector3d center() const { return {0.5 * geom.lx, 0.5 * geom.ly, 0.5 * geom.lz}; }
};

inline BenchmarkConfig make_benchmark_config() {
    BenchmarkConfig cfg;
    cfg.geom = modes::cubic_geometry_for_sum_frequency(3.9e9);
    cfg.omega_gw = 2.0 * kPi * 3.9e9;
    cfg.khat = gw::propagation_direction(0.5 * kPi, kPi / 6.0);
    cfg.K = (cfg.omega_gw / kSpeedOfLight) * cfg.khat;
    cfg.e_plus = gw::polarization_tensor(cfg.khat, gw::Polarization::plus);
    return cfg;
}

}  // namespace gpmix::testsupport
