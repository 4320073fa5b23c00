#pragma once

#include <vector>

namespace gpmix::gw {

// Gauss-Legendre nodes and weights on [a, b]. Nodes are returned in
// ascending order. order must be >= 1.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int order, double a, double b);

}  // namespace gpmix::gw
