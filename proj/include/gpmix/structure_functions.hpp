#pragma once

namespace gpmix::gw {

// Dimensionless structure functions of the long-wavelength expansion of the
// metric perturbation in the local (Fermi-like) frame:
//
//   f0(u) = (1 - cos u)/u^2
//   f1(u) = -sin(u)/u^3 + cos(u)/u^2
//   f2(u) = (1 + cos u)/u^2 - 2 sin(u)/u^3
//
// with limits f0(0) = 1/2, f1(0) = -1/3, f2(0) = -1/6.
//
// The closed forms suffer catastrophic cancellation for small |u|, so below
// |u| = kStructureSwitch they are evaluated from their alternating Taylor
// series, summed to machine convergence:
//   f0 = 1/2 - u^2/24 + u^4/720 - ...
//   f1 = -1/3 + u^2/30 - u^4/840 + ...
//   f2 = -1/6 + u^2/40 - u^4/1008 + ...
// The switch point is chosen so that the closed forms are already accurate to
// ~1e-13 at |u| = kStructureSwitch, keeping the two branches continuous to
// better than 1e-12.
inline constexpr double kStructureSwitch = 0.1;

double f0(double u);
double f1(double u);
double f2(double u);

}  // namespace gpmix::gw
