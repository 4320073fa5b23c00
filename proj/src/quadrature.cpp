#include "gpmix/quadrature.hpp"

#include <cmath>

#include "gpmix/constants.hpp"
#include "gpmix/errors.hpp"

namespace gpmix::gw {

GaussRule gauss_legendre(int order, double a, double b) {
    if (order < 1) throw ConfigError("quadrature order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    // Newton iteration on the Legendre polynomial P_order over [-1, 1];
    // roots come in +/- pairs, so only the lower half is solved for.
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_order(x) and its derivative by upward recurrence.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th root from the top; mirror to fill ascending order.
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
    }

    // Affine map [-1,1] -> [a,b].
    const double mid = 0.5 * (a + b);
    const double scale = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
        rule.nodes[i] = mid + scale * rule.nodes[i];
        rule.weights[i] *= scale;
    }
    return rule;
}

}  // namespace gpmix::gw
