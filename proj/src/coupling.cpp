#include "gpmix/coupling.hpp"

#include <cmath>

#include "gpmix/constants.hpp"
#include "gpmix/errors.hpp"

namespace gpmix::gw {

double coupling_normalization(double omega_gw, double cavity_volume) {
    if (!(omega_gw > 0.0) || !(cavity_volume > 0.0)) {
        throw ConfigError("coupling normalization requires positive frequency and volume");
    }
    const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    return (kHbar / planck_energy()) *
           std::sqrt(16.0 * kPi * c3 / (2.0 * omega_gw * cavity_volume));
}

double coupling_strength(double omega_a, double omega_b, double c_g, double abs_overlap) {
    return std::sqrt(omega_a * omega_b) * c_g * abs_overlap;
}

double graviton_number(double h_plus, double omega_gw) {
    const double amp = planck_energy() * h_plus / (kHbar * omega_gw);
    return amp * amp;
}

double strain_for_graviton_number(double n_g, double omega_gw) {
    if (n_g < 0.0) throw ConfigError("graviton number must be non-negative");
    return std::sqrt(n_g) * kHbar * omega_gw / planck_energy();
}

}  // namespace gpmix::gw
