#pragma once

#include <Eigen/Dense>

#include "gpmix/errors.hpp"

namespace gpmix::gw {

enum class Polarization { plus, cross };

// Unit propagation direction from polar angles:
//   Khat = (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)).
Eigen::Vector3d propagation_direction(double theta, double phi);

// Transverse-traceless polarization tensor for a wave along khat.
// The transverse dyad (uhat, vhat) is fixed deterministically: uhat is the
// Cartesian axis of smallest |khat| component (lowest index on ties),
// projected transverse to khat and normalized; vhat = khat x uhat. Then
//   e_plus = uhat uhat^T - vhat vhat^T,
//   e_cross = uhat vhat^T + vhat uhat^T.
// Both are symmetric, traceless, orthogonal to khat, and normalized so that
// sum_ij e_ij^2 = 2. Throws ConfigError if khat is not a unit vector.
Eigen::Matrix3d polarization_tensor(const Eigen::Vector3d& khat, Polarization pol);

}  // namespace gpmix::gw
