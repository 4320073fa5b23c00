#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gpmix/geometry.hpp"

namespace gpmix::modes {

// TE-type (E_z = 0) eigenmodes of the rectangular cavity. The transverse mode
// function is
//   u_i(r) = N a_i cos(k_i r_i) * prod_{j != i} sin(k_j r_j),
// with k = (m pi/lx, n pi/ly, p pi/lz) and transverse amplitude
// a = (k_y, -k_x, 0), which is divergence-free and satisfies the conducting
// boundary conditions (tangential components vanish on the walls).
// N normalizes \int_V u.u dV = 1.

// A mode index is valid when at most one of (m,n,p) is zero and the resulting
// field is nontrivial; for this family that means p >= 1 and at least one of
// (m,n) nonzero.
bool is_valid_te_mode(const ModeIndex& idx);

// Wavevector (m pi/lx, n pi/ly, p pi/lz). Throws std::domain_error for
// invalid indices.
Eigen::Vector3d wavevector(const CavityGeometry& geom, const ModeIndex& idx);

// Angular frequency omega = c |k| in rad/s. Throws std::domain_error for
// invalid indices.
double mode_frequency(const CavityGeometry& geom, const ModeIndex& idx);

// Normalization constant N (see header comment). Throws std::domain_error for
// invalid indices.
double mode_normalization(const CavityGeometry& geom, const ModeIndex& idx);

// Normalized mode field u(r). Throws std::domain_error if idx is invalid or
// pos lies outside the cavity box.
Eigen::Vector3d te_mode_field(const CavityGeometry& geom, const ModeIndex& idx,
                              const Eigen::Vector3d& pos);

// Analytic curl of the normalized mode field,
//   (curl u)_i = N (k x a)_i sin(k_i r_i) * prod_{j != i} cos(k_j r_j).
Eigen::Vector3d te_mode_curl(const CavityGeometry& geom, const ModeIndex& idx,
                             const Eigen::Vector3d& pos);

// All valid TE modes with indices m,n,p <= index_cap, sorted by frequency
// ascending with lexicographic index tie-break.
std::vector<ModeIndex> enumerate_modes(const CavityGeometry& geom, int index_cap);

}  // namespace gpmix::modes
