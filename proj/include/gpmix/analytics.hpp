#pragma once

#include <cstddef>
#include <vector>

namespace gpmix::analytics {

// Single-graviton Rabi oscillation |1,0,0> <-> |0,1,1>:
// expected conversion population and reduced-pair purity at phase gt.
double rabi_n_c(double gt);      // sin^2(gt)
double rabi_purity(double gt);   // cos^4(gt) + sin^4(gt)

// Semiclassical parametric growth of the bright conversion mode at squeezing
// parameter tau = g sqrt(n_g) t: n_c = (n_alpha0 + 1) sinh^2(tau) for an
// initial alpha population n_alpha0, and 2 sinh^2(tau) for the total photon
// number added across both modes of the pair (vacuum input).
double semiclassical_n_c(double tau, double n_alpha0 = 0.0);
double semiclassical_pair_total(double tau);

// Squeezing-parameter estimate r = h_plus * Omega * |A| * t for a classical
// strain h_plus driving the pair for time t, and the corresponding mean pair
// occupation sinh^2(r).
double squeezing_estimate(double h_plus, double omega_gw, double abs_overlap, double t);
double squeezed_occupation(double r);

// Least-squares coefficient a of y ~= a t^2 through the origin (early-time
// growth-rate extraction). Throws ConfigError on size mismatch or all-zero t.
double quadratic_growth_coefficient(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace gpmix::analytics
