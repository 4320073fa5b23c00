#include "gpmix/analytics.hpp"

#include <cmath>

#include "gpmix/errors.hpp"

namespace gpmix::analytics {

double rabi_n_c(double gt) {
    const double s = std::sin(gt);
    return s * s;
}

double rabi_purity(double gt) {
    const double c2 = std::cos(gt) * std::cos(gt);
    const double s2 = std::sin(gt) * std::sin(gt);
    return c2 * c2 + s2 * s2;
}

double semiclassical_n_c(double tau, double n_alpha0) {
    const double sh = std::sinh(tau);
    return (n_alpha0 + 1.0) * sh * sh;
}

double semiclassical_pair_total(double tau) {
    const double sh = std::sinh(tau);
    return 2.0 * sh * sh;
}

double squeezing_estimate(double h_plus, double omega_gw, double abs_overlap, double t) {
    return h_plus * omega_gw * abs_overlap * t;
}

double squeezed_occupation(double r) {
    const double sh = std::sinh(r);
    return sh * sh;
}

double quadratic_growth_coefficient(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size() || t.empty()) {
        throw ConfigError("growth fit requires equal-length non-empty samples");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double t2 = t[i] * t[i];
        num += y[i] * t2;
        den += t2 * t2;
    }
    if (!(den > 0.0)) throw ConfigError("growth fit requires at least one nonzero time");
    return num / den;
}

}  // namespace gpmix::analytics
