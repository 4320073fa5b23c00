#pragma once

#include <complex>

#include "gpmix/geometry.hpp"

namespace gpmix::gw {

// Single-graviton coupling normalization
//   C_g = (hbar/E_pl) sqrt(16 pi c^3 / (2 Omega V)) = sqrt(8 pi G hbar/(Omega c^2 V)),
// dimension s (so that sqrt(omega_a omega_b) C_g is a rate in rad/s).
double coupling_normalization(double omega_gw, double cavity_volume);

// Trilinear coupling rate g = sqrt(omega_a omega_b) * C_g * |A| in rad/s.
double coupling_strength(double omega_a, double omega_b, double c_g, double abs_overlap);

// Mean graviton number seen by the cavity for a classical strain amplitude
// h_plus at angular frequency omega_gw: n_g = (E_pl h_plus / (hbar omega_gw))^2.
double graviton_number(double h_plus, double omega_gw);

// Classical strain equivalent of a mean graviton number (inverse of the above).
double strain_for_graviton_number(double n_g, double omega_gw);

struct CouplingResult {
    modes::ModeIndex alpha;
    modes::ModeIndex beta;
    double omega_alpha = 0.0;
    double omega_beta = 0.0;
    std::complex<double> overlap{0.0, 0.0};
    double abs_overlap = 0.0;
    double g = 0.0;  // rad/s
};

}  // namespace gpmix::gw
