#pragma once

#include <cstdint>
#include <string>

namespace gpmix {

// CODATA-2018 values in SI units.
inline constexpr double kSpeedOfLight = 299792458.0;     // m s^-1 (exact)
inline constexpr double kHbar = 1.054571817e-34;         // J s
inline constexpr double kNewtonG = 6.67430e-11;          // m^3 kg^-1 s^-2
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Planck energy sqrt(hbar c^5 / G) in joules (~1.956e9 J).
double planck_energy();

// Canonical plain-text listing of the constants above; its FNV-1a hash is
// embedded in every output artifact so results can be traced to the exact
// constant values used.
std::string constants_table();
std::uint64_t constants_hash();
std::string constants_hash_hex();

}  // namespace gpmix
