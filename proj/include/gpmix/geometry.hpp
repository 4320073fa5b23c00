#pragma once

#include <compare>

#include "gpmix/errors.hpp"

namespace gpmix::modes {

// Rectangular cavity with perfectly conducting walls, occupying
// [0,lx] x [0,ly] x [0,lz] in meters.
struct CavityGeometry {
    double lx = 0.0;
    double ly = 0.0;
    double lz = 0.0;

    double volume() const { return lx * ly * lz; }
};

inline void validate(const CavityGeometry& g) {
    if (!(g.lx > 0.0) || !(g.ly > 0.0) || !(g.lz > 0.0)) {
        throw ConfigError("cavity geometry requires strictly positive side lengths");
    }
}

// Builds the cubic cavity whose two lowest TE mode families sum to the target
// angular frequency: side = c*(sqrt(3)+sqrt(6))/(2 f).
CavityGeometry cubic_geometry_for_sum_frequency(double f_hz);

// Non-negative integer mode triple (m, n, p). Ordered lexicographically.
struct ModeIndex {
    int m = 0;
    int n = 0;
    int p = 0;

    friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

}  // namespace gpmix::modes
