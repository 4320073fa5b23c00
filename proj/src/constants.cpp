#include "gpmix/constants.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gpmix/version.hpp"

namespace gpmix {

double planck_energy() {
    return std::sqrt(kHbar * std::pow(kSpeedOfLight, 5) / kNewtonG);
}

namespace {

std::string format_17g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string constants_table() {
    std::ostringstream out;
    out << "speed_of_light_m_per_s=" << format_17g(kSpeedOfLight) << '\n'
        << "hbar_J_s=" << format_17g(kHbar) << '\n'
        << "newton_G_m3_per_kg_s2=" << format_17g(kNewtonG) << '\n'
        << "planck_energy_J=" << format_17g(planck_energy()) << '\n';
    return out.str();
}

std::uint64_t constants_hash() { return fnv1a64(constants_table()); }

std::string constants_hash_hex() { return hash_hex(constants_hash()); }

std::string hash_hex(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace gpmix
