#include "doctest.h"

#include <cmath>
#include <random>

#include "gpmix/cavity_modes.hpp"
#include "gpmix/constants.hpp"
#include "gpmix/quadrature.hpp"

using namespace gpmix;
using namespace gpmix::modes;

namespace {

// Independent numerical volume integral of u_a . u_b over the box via
// tensor-product Gauss-Legendre (order high enough to be exact for the
// trigonometric products involved at these indices).
double field_inner_product(const CavityGeometry& geom, const ModeIndex& a, const ModeIndex& b) {
    const auto gx = gw::gauss_legendre(24, 0.0, geom.lx);
    const auto gy = gw::gauss_legendre(24, 0.0, geom.ly);
    const auto gz = gw::gauss_legendre(24, 0.0, geom.lz);
    double acc = 0.0;
    for (std::size_t i = 0; i < gx.nodes.size(); ++i) {
        for (std::size_t j = 0; j < gy.nodes.size(); ++j) {
            for (std::size_t k = 0; k < gz.nodes.size(); ++k) {
                const Eigen::Vector3d pos(gx.nodes[i], gy.nodes[j], gz.nodes[k]);
                acc += gx.weights[i] * gy.weights[j] * gz.weights[k] *
                       te_mode_field(geom, a, pos).dot(te_mode_field(geom, b, pos));
            }
        }
    }
    return acc;
}

}  // namespace

TEST_SUITE("cavity_modes") {

TEST_CASE("mode index validity") {
    CHECK(is_valid_te_mode({1, 1, 1}));
    CHECK(is_valid_te_mode({0, 1, 1}));
    CHECK(is_valid_te_mode({1, 0, 1}));
    CHECK(is_valid_te_mode({2, 1, 1}));
    CHECK_FALSE(is_valid_te_mode({1, 1, 0}));  // field identically zero
    CHECK_FALSE(is_valid_te_mode({0, 0, 1}));  // two zero indices
    CHECK_FALSE(is_valid_te_mode({0, 0, 0}));
    CHECK_FALSE(is_valid_te_mode({-1, 1, 1}));
    CHECK_FALSE(is_valid_te_mode({1, -2, 1}));
}

TEST_CASE("invalid index or geometry raises") {
    const CavityGeometry geom{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(mode_frequency(geom, {1, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(te_mode_field(geom, {0, 0, 1}, {0.05, 0.05, 0.05}), std::domain_error);
    CHECK_THROWS_AS(mode_frequency(CavityGeometry{0.0, 0.2, 0.3}, {1, 1, 1}), ConfigError);
    // Field points outside the box are rejected.
    CHECK_THROWS_AS(te_mode_field(geom, {1, 1, 1}, {0.11, 0.05, 0.05}), std::domain_error);
    CHECK_THROWS_AS(te_mode_field(geom, {1, 1, 1}, {0.05, -0.01, 0.05}), std::domain_error);
}

TEST_CASE("cubic benchmark geometry puts the pair sum on resonance") {
    const CavityGeometry geom = cubic_geometry_for_sum_frequency(3.9e9);
    const double side = kSpeedOfLight * (std::sqrt(3.0) + std::sqrt(6.0)) / (2.0 * 3.9e9);
    CHECK(geom.lx == doctest::Approx(side).epsilon(1e-15));
    CHECK(geom.ly == geom.lx);
    CHECK(geom.lz == geom.lx);
    const double w111 = mode_frequency(geom, {1, 1, 1});
    const double w211 = mode_frequency(geom, {2, 1, 1});
    CHECK((w111 + w211) / (2.0 * kPi) == doctest::Approx(3.9e9).epsilon(1e-12));
    // Degenerate partners share the frequency exactly by symmetry.
    CHECK(mode_frequency(geom, {1, 2, 1}) == doctest::Approx(w211).epsilon(1e-15));
    CHECK(mode_frequency(geom, {1, 1, 2}) == doctest::Approx(w211).epsilon(1e-15));
}

TEST_CASE("lowest mode of a 0.161 m cube is near 1.61 GHz") {
    const CavityGeometry geom{0.161, 0.161, 0.161};
    const double f_ghz = mode_frequency(geom, {1, 1, 1}) / (2.0 * kPi * 1e9);
    CHECK(f_ghz == doctest::Approx(1.61).epsilon(0.01));
}

TEST_CASE("fields are unit-normalized including single-zero indices") {
    const CavityGeometry geom{0.16, 0.21, 0.13};
    for (const ModeIndex idx : {ModeIndex{1, 1, 1}, ModeIndex{2, 1, 1}, ModeIndex{0, 1, 1},
                                ModeIndex{1, 0, 2}, ModeIndex{2, 3, 1}}) {
        CAPTURE(idx.m);
        CAPTURE(idx.n);
        CAPTURE(idx.p);
        CHECK(field_inner_product(geom, idx, idx) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("distinct modes are orthogonal") {
    const CavityGeometry geom{0.16, 0.21, 0.13};
    CHECK(std::fabs(field_inner_product(geom, {1, 1, 1}, {2, 1, 1})) < 1e-12);
    CHECK(std::fabs(field_inner_product(geom, {1, 1, 1}, {1, 1, 2})) < 1e-12);
    CHECK(std::fabs(field_inner_product(geom, {0, 1, 1}, {1, 0, 1})) < 1e-12);
}

TEST_CASE("tangential components vanish on the walls") {
    const CavityGeometry geom{0.16, 0.21, 0.13};
    const ModeIndex idx{2, 1, 3};
    for (double frac : {0.21, 0.5, 0.83}) {
        // x = 0 and x = lx walls: tangential components are u_y, u_z.
        for (double x : {0.0, geom.lx}) {
            const Eigen::Vector3d u = te_mode_field(geom, idx, {x, frac * geom.ly, frac * geom.lz});
            CHECK(std::fabs(u.y()) < 1e-13);
            CHECK(std::fabs(u.z()) < 1e-13);
        }
        for (double y : {0.0, geom.ly}) {
            const Eigen::Vector3d u = te_mode_field(geom, idx, {frac * geom.lx, y, frac * geom.lz});
            CHECK(std::fabs(u.x()) < 1e-13);
            CHECK(std::fabs(u.z()) < 1e-13);
        }
        for (double z : {0.0, geom.lz}) {
            const Eigen::Vector3d u = te_mode_field(geom, idx, {frac * geom.lx, frac * geom.ly, z});
            CHECK(std::fabs(u.x()) < 1e-13);
            CHECK(std::fabs(u.y()) < 1e-13);
        }
    }
}

TEST_CASE("analytic curl matches finite differences") {
    const CavityGeometry geom{0.16, 0.21, 0.13};
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    for (const ModeIndex idx : {ModeIndex{1, 1, 1}, ModeIndex{2, 1, 1}, ModeIndex{0, 2, 1},
                                ModeIndex{3, 2, 2}}) {
        for (int trial = 0; trial < 6; ++trial) {
            const Eigen::Vector3d pos(unit(rng) * geom.lx, unit(rng) * geom.ly,
                                      unit(rng) * geom.lz);
            const double h = 1e-6 * geom.lx;
            Eigen::Vector3d fd;
            for (int i = 0; i < 3; ++i) {
                const int j = (i + 1) % 3;
                const int k = (i + 2) % 3;
                Eigen::Vector3d dj = Eigen::Vector3d::Zero();
                dj[j] = h;
                Eigen::Vector3d dk = Eigen::Vector3d::Zero();
                dk[k] = h;
                // (curl u)_i = d_j u_k - d_k u_j
                fd[i] = (te_mode_field(geom, idx, pos + dj)[k] -
                         te_mode_field(geom, idx, pos - dj)[k]) /
                            (2.0 * h) -
                        (te_mode_field(geom, idx, pos + dk)[j] -
                         te_mode_field(geom, idx, pos - dk)[j]) /
                            (2.0 * h);
            }
            const Eigen::Vector3d analytic = te_mode_curl(geom, idx, pos);
            CHECK((fd - analytic).norm() <= 1e-6 * analytic.norm() + 1e-10);
        }
    }
}

TEST_CASE("fields are divergence-free") {
    const CavityGeometry geom{0.16, 0.21, 0.13};
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> unit(0.1, 0.9);
    for (const ModeIndex idx : {ModeIndex{1, 1, 1}, ModeIndex{2, 3, 1}, ModeIndex{0, 1, 2}}) {
        for (int trial = 0; trial < 4; ++trial) {
            const Eigen::Vector3d pos(unit(rng) * geom.lx, unit(rng) * geom.ly,
                                      unit(rng) * geom.lz);
            const double h = 1e-6 * geom.lx;
            double div = 0.0;
            for (int i = 0; i < 3; ++i) {
                Eigen::Vector3d d = Eigen::Vector3d::Zero();
                d[i] = h;
                div += (te_mode_field(geom, idx, pos + d)[i] -
                        te_mode_field(geom, idx, pos - d)[i]) /
                       (2.0 * h);
            }
            // Scale: |u| ~ sqrt(8/V) and derivatives bring a factor |k|.
            const double scale =
                wavevector(geom, idx).norm() * te_mode_field(geom, idx, pos).norm();
            CHECK(std::fabs(div) <= 1e-6 * scale + 1e-8);
        }
    }
}

TEST_CASE("mode enumeration is frequency-sorted and honors the cap") {
    const CavityGeometry geom = cubic_geometry_for_sum_frequency(3.9e9);
    const auto list = enumerate_modes(geom, 2);
    REQUIRE(!list.empty());
    // In a cube the single-zero family (0,1,1)/(1,0,1) sits lowest, below the
    // (1,1,1) family.
    const double f0 = mode_frequency(geom, list.front());
    CHECK(f0 == doctest::Approx(mode_frequency(geom, {0, 1, 1})).epsilon(1e-12));
    CHECK(f0 < mode_frequency(geom, {1, 1, 1}));
    for (std::size_t i = 1; i < list.size(); ++i) {
        CHECK(mode_frequency(geom, list[i]) >= mode_frequency(geom, list[i - 1]) * (1 - 1e-14));
        CHECK(list[i].m <= 2);
        CHECK(list[i].n <= 2);
        CHECK(list[i].p <= 2);
    }
    CHECK(enumerate_modes(geom, 0).empty());
    CHECK_THROWS_AS(enumerate_modes(geom, -1), ConfigError);
}

}  // TEST_SUITE
