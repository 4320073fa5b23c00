#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gpmix/cavity_modes.hpp"
#include "gpmix/gw_tensors.hpp"

namespace gpmix::gw {

// Dimensionless tidal overlap integral between two cavity modes and an
// incident gravitational wave. The integrand couples the mode pair tensor
//   P_ij = (curl u_a)_i (curl u_b)_j / (k_a k_b) - u_a,i u_b,j
// to the wave through the tidal tensor built from the structure functions
// f0, f1, f2 of u = K.(r - origin), contracted with the quadratic tidal
// factors x^k x^l (x = r - origin):
//
//   integrand = (1/4) Xi_ijkl P_ij x_k x_l
//               - (i/(2 k_b)) |K| f1(u) [ (w.K)(x.e x) - (K.x)(w.e x) ]
// with
//   Xi_ijkl = -(K_j K_k e_il + K_l K_i e_kj - K_l K_k e_ij - K_i K_j e_kl) f2(u)
//             + (|K|^2/2) delta_ij e_kl (f0(u) - f2(u)),
//   w = u_a x (curl u_b).
//
// The Xi contraction is real and the magnetic cross-term imaginary, so the
// overlap value is complex; physical coupling strengths use |A|.

struct QuadratureSpec {
    int order = 16;          // Gauss-Legendre points per axis to start with
    double rtol = 1e-6;      // relative convergence tolerance under order doubling
    double atol = 1e-14;     // absolute floor for near-zero integrals
    int max_doublings = 3;   // maximum number of order doublings
};

struct OverlapResult {
    std::complex<double> value{0.0, 0.0};     // converged estimate
    std::complex<double> previous{0.0, 0.0};  // estimate at half the final order
    int order_used = 0;
    bool converged = false;

    double abs() const { return std::abs(value); }
};

// Pre-evaluated per-mode quantities used by the integrand.
struct ModeEval {
    Eigen::Vector3d k;       // wavevector
    Eigen::Vector3d amp;     // unnormalized transverse amplitude a
    double norm = 0.0;       // normalization constant N
    double kmag = 0.0;       // |k|
};

ModeEval make_mode_eval(const modes::CavityGeometry& geom, const modes::ModeIndex& idx);

// Integrand value at a point (exposed for unit tests).
std::complex<double> overlap_integrand(const ModeEval& mode_a, const ModeEval& mode_b,
                                       const Eigen::Vector3d& K, const Eigen::Matrix3d& e,
                                       const Eigen::Vector3d& origin,
                                       const Eigen::Vector3d& pos);

// Tensor-product Gauss-Legendre evaluation of the overlap integral with
// adaptive order doubling. K is the full wavevector (Omega/c) * khat of the
// incident wave; origin is the reference point of the tidal factors.
// The OpenMP variant parallelizes over slabs of the outer quadrature axis and
// reduces the per-slab partial sums serially in slab order, so the result is
// byte-identical for every thread count. overlap_integral_serial is a plain
// serial reference implementation kept for testing and benchmarking.
OverlapResult overlap_integral(const modes::CavityGeometry& geom,
                               const modes::ModeIndex& mode_a, const modes::ModeIndex& mode_b,
                               const Eigen::Vector3d& K, const Eigen::Matrix3d& e,
                               const Eigen::Vector3d& origin, const QuadratureSpec& spec = {});

OverlapResult overlap_integral_serial(const modes::CavityGeometry& geom,
                                      const modes::ModeIndex& mode_a,
                                      const modes::ModeIndex& mode_b,
                                      const Eigen::Vector3d& K, const Eigen::Matrix3d& e,
                                      const Eigen::Vector3d& origin,
                                      const QuadratureSpec& spec = {});

}  // namespace gpmix::gw
