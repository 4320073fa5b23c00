#include "gpmix/structure_functions.hpp"

#include <cmath>

namespace gpmix::gw {

namespace {

constexpr int kMaxTerms = 40;

// f0 = sum_{j>=1} (-1)^{j+1} u^{2j-2} / (2j)!
double f0_series(double u) {
    const double u2 = u * u;
    double term = 0.5;  // j = 1
    double sum = term;
    for (int j = 2; j <= kMaxTerms; ++j) {
        term *= -u2 / ((2.0 * j) * (2.0 * j - 1.0));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// f1 = sum_{j>=1} (-1)^j (2j) u^{2j-2} / (2j+1)!
double f1_series(double u) {
    const double u2 = u * u;
    double term = -1.0 / 3.0;  // j = 1
    double sum = term;
    for (int j = 2; j <= kMaxTerms; ++j) {
        // ratio of consecutive terms: -u^2 * j / ((j-1)(2j)(2j+1))
        term *= -u2 * j / ((j - 1.0) * (2.0 * j) * (2.0 * j + 1.0));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// f2 = sum_{j>=1} (-1)^j (2j-1) u^{2j-2} / (2j+1)!
double f2_series(double u) {
    const double u2 = u * u;
    double term = -1.0 / 6.0;  // j = 1
    double sum = term;
    for (int j = 2; j <= kMaxTerms; ++j) {
        // ratio of consecutive terms: -u^2 (2j-1) / ((2j-3)(2j)(2j+1))
        term *= -u2 * (2.0 * j - 1.0) / ((2.0 * j - 3.0) * (2.0 * j) * (2.0 * j + 1.0));
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

double f0(double u) {
    if (std::fabs(u) < kStructureSwitch) return f0_series(u);
    // 1 - cos u = 2 sin^2(u/2): avoids cancellation near the zeros at 2 pi k.
    const double s = std::sin(0.5 * u);
    return 2.0 * s * s / (u * u);
}

double f1(double u) {
    if (std::fabs(u) < kStructureSwitch) return f1_series(u);
    return -std::sin(u) / (u * u * u) + std::cos(u) / (u * u);
}

double f2(double u) {
    if (std::fabs(u) < kStructureSwitch) return f2_series(u);
    // 1 + cos u = 2 cos^2(u/2): avoids cancellation near u = pi (2k+1).
    const double c = std::cos(0.5 * u);
    return 2.0 * c * c / (u * u) - 2.0 * std::sin(u) / (u * u * u);
}

}  // namespace gpmix::gw
