#include "gpmix/gw_tensors.hpp"

#include <cmath>

namespace gpmix::gw {

Eigen::Vector3d propagation_direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

Eigen::Matrix3d polarization_tensor(const Eigen::Vector3d& khat, Polarization pol) {
    if (std::fabs(khat.norm() - 1.0) > 1e-12) {
        throw ConfigError("polarization_tensor requires a unit propagation direction");
    }
    // Deterministic transverse dyad: seed with the Cartesian axis of smallest
    // |khat| component (lowest index on ties), project transverse, normalize.
    int axis = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::fabs(khat[i]) < std::fabs(khat[axis])) axis = i;
    }
    Eigen::Vector3d seed = Eigen::Vector3d::Zero();
    seed[axis] = 1.0;
    Eigen::Vector3d uhat = seed - khat.dot(seed) * khat;
    uhat.normalize();
    const Eigen::Vector3d vhat = khat.cross(uhat);

    if (pol == Polarization::plus) {
        return uhat * uhat.transpose() - vhat * vhat.transpose();
    }
    return uhat * vhat.transpose() + vhat * uhat.transpose();
}

}  // namespace gpmix::gw
