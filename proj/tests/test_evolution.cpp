#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include <Eigen/Dense>

#include "gpmix/errors.hpp"
#include "gpmix/evolution.hpp"
#include "gpmix/fock.hpp"
#include "support/product_oracle.hpp"

using namespace gpmix;
using std::complex;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

// Hand-built normalized state spread over several sectors and several basis
// positions within each, for conservation tests.
fock::QuantumState random_mixture(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    fock::QuantumState state;
    const std::pair<std::int64_t, std::int64_t> sectors[] = {
        {4, 0}, {6, 0}, {6, 2}, {7, -1}, {9, 1}};
    for (const auto& [M, N] : sectors) {
        fock::SectorBlock block{fock::build_sector(M, N), {}};
        block.amp = Eigen::VectorXcd::Zero(block.sector.dim());
        for (Eigen::Index i = 0; i < block.amp.size(); ++i) {
            block.amp[i] = complex<double>(dist(rng), dist(rng));
        }
        state.blocks.push_back(std::move(block));
    }
    double norm = state.norm();
    for (auto& block : state.blocks) block.amp /= norm;
    return state;
}

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("single-pump Rabi oscillation is exact") {
    // |1,0,0> under resonant coupling: <n_c>(t) = sin^2(gt),
    // purity(t) = cos^4 + sin^4, entropy the matching binary mix.
    const double g = 1.0;
    const auto times = linspace(0.0, 10.0, 101);
    const auto res = fock::evolve(fock::basis_state(1, 0, 0), g, 0.0, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double c2 = std::pow(std::cos(g * times[i]), 2);
        const double s2 = std::pow(std::sin(g * times[i]), 2);
        CAPTURE(times[i]);
        CHECK(std::fabs(res.series.n_c[i] - s2) < 1e-12);
        CHECK(std::fabs(res.series.n_alpha[i] - s2) < 1e-12);
        CHECK(std::fabs(res.series.n_b[i] - c2) < 1e-12);
        CHECK(std::fabs(res.series.purity[i] - (c2 * c2 + s2 * s2)) < 1e-12);
        double ent = 0.0;
        if (c2 > 0.0) ent -= c2 * std::log(c2);
        if (s2 > 0.0) ent -= s2 * std::log(s2);
        CHECK(std::fabs(res.series.entropy[i] - ent) < 1e-10);
        CHECK(std::fabs(res.series.norm_drift[i]) < 1e-14);
    }
}

TEST_CASE("reduced EM density at the balanced point of the Rabi cycle") {
    const double g = 1.0;
    const double t = M_PI / 4.0;  // gt = pi/4: equal weights
    const auto res = fock::evolve(fock::basis_state(1, 0, 0), g, 0.0, {t});
    const auto red = fock::reduced_em_density(res.final_state);
    REQUIRE(red.em_basis.size() == 2);
    CHECK(red.em_basis[0] == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(red.em_basis[1] == std::pair<std::int64_t, std::int64_t>{1, 1});
    // Off-diagonals vanish because the two photon configurations ride on
    // different pump occupations; diagonal is (1/2, 1/2).
    CHECK(std::abs(red.rho(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(red.rho(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(red.rho(0, 1)) < 1e-14);
    CHECK(fock::purity_of(red.rho) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(fock::entropy_of(red.rho) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("detuned two-level transfer follows the generalized Rabi formula") {
    const double g = 0.8;
    const double delta = 1.1;
    const double W = std::sqrt(g * g + 0.25 * delta * delta);
    const auto times = linspace(0.0, 8.0, 81);
    const auto res = fock::evolve(fock::basis_state(1, 0, 0), g, delta, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double want = g * g / (W * W) * std::pow(std::sin(W * times[i]), 2);
        CAPTURE(times[i]);
        CHECK(std::fabs(res.series.n_c[i] - want) < 1e-12);
    }
}

TEST_CASE("coherent pump state construction") {
    const double eta = std::sqrt(50.0);
    const std::int64_t cutoff = 100;
    const auto state = fock::coherent_graviton_state(eta, cutoff);
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const auto occ = fock::occupations(state);
    // The 6-sigma cutoff margin leaves ~1e-9 tail mass, shifting the
    // renormalized mean at the 1e-8 level.
    CHECK(occ.n_b == doctest::Approx(50.0).epsilon(1e-8));
    CHECK(occ.n_alpha == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(occ.n_c == doctest::Approx(0.0).epsilon(1e-14));

    // Photon offsets shift the EM occupations without touching the pump.
    const auto seeded = fock::coherent_graviton_state(2.0, 30, 3, 1);
    const auto socc = fock::occupations(seeded);
    CHECK(socc.n_b == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(socc.n_alpha == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(socc.n_c == doctest::Approx(1.0).epsilon(1e-12));

    // Coherent state of the pump alone is a product state: EM purity 1.
    const auto red = fock::reduced_em_density(state);
    CHECK(fock::purity_of(red.rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("undersized coherent cutoff is rejected with the required value") {
    const double eta = std::sqrt(50.0);  // needs ceil(50 + 6 sqrt 50) = 93
    try {
        fock::coherent_graviton_state(eta, 60);
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        const std::string msg = err.what();
        CHECK(msg.find("93") != std::string::npos);
        CHECK(msg.find("60") != std::string::npos);
    }
}

TEST_CASE("charges and norm are conserved for mixed multi-sector states") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const auto state = random_mixture(seed);
        const auto res = fock::evolve(state, 0.9, 0.17, linspace(0.0, 12.0, 60));
        for (std::size_t i = 0; i < res.series.t.size(); ++i) {
            CAPTURE(seed);
            CAPTURE(res.series.t[i]);
            CHECK(std::fabs(res.series.norm_drift[i]) < 1e-12);
            CHECK(std::fabs(res.series.m_drift[i]) < 1e-10);
            CHECK(std::fabs(res.series.n_drift[i]) < 1e-10);
        }
    }
}

TEST_CASE("pump depletion balances conversion for N = 0 states") {
    const auto state = fock::basis_state(5, 0, 0);
    const auto res = fock::evolve(state, 1.0, 0.0, linspace(0.0, 3.0, 40));
    for (std::size_t i = 0; i < res.series.t.size(); ++i) {
        CHECK(std::fabs(res.series.n_b[i] - (5.0 - res.series.n_c[i])) < 1e-10);
        CHECK(std::fabs(res.series.n_alpha[i] - res.series.n_c[i]) < 1e-12);
    }
}

TEST_CASE("sector evolution matches the dense product-grid oracle") {
    // |2,1,0>: stimulated emission into a pre-seeded signal mode, g = 0.7,
    // delta = 0.3. The oracle enumerates the full truncated product grid and
    // shares no basis bookkeeping with the sector code.
    const double g = 0.7;
    const double delta = 0.3;
    testsupport::ProductOracle oracle({4, 5, 4}, {{1, 2, g}}, delta);
    const Eigen::VectorXcd psi0 = oracle.basis_vector({2, 1, 0});

    const auto res =
        fock::evolve(fock::basis_state(2, 1, 0), g, delta, linspace(0.0, 2.7, 10));
    for (std::size_t i = 0; i < res.series.t.size(); ++i) {
        const Eigen::VectorXcd psi = oracle.evolve(psi0, res.series.t[i]);
        CAPTURE(res.series.t[i]);
        CHECK(std::fabs(res.series.n_b[i] - oracle.occupation(psi, 0)) < 1e-10);
        CHECK(std::fabs(res.series.n_alpha[i] - oracle.occupation(psi, 1)) < 1e-10);
        CHECK(std::fabs(res.series.n_c[i] - oracle.occupation(psi, 2)) < 1e-10);
        CHECK(std::fabs(res.series.purity[i] - oracle.photon_purity(psi)) < 1e-10);
    }
}

TEST_CASE("member occupations split by coupling weight") {
    const auto split = fock::member_occupations(10.0, {3.0, 4.0});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == doctest::Approx(3.6).epsilon(1e-14));
    CHECK(split[1] == doctest::Approx(6.4).epsilon(1e-14));
    CHECK_THROWS_AS(fock::member_occupations(1.0, {0.0, 0.0}), ConfigError);
}

TEST_CASE("purity and entropy of simple density matrices") {
    Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(3, 3);
    pure(1, 1) = 1.0;
    CHECK(fock::purity_of(pure) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fock::entropy_of(pure) == doctest::Approx(0.0).epsilon(1e-14));

    Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(2, 2);
    mixed(0, 0) = 0.5;
    mixed(1, 1) = 0.5;
    CHECK(fock::purity_of(mixed) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(fock::entropy_of(mixed) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("oversized sectors trip the resource cap") {
    fock::EvolveOptions opts;
    opts.sector_dim_cap = 5;
    CHECK_THROWS_AS(
        fock::evolve(fock::basis_state(10, 0, 0), 1.0, 0.0, {0.1}, opts),
        ResourceCapError);
}

TEST_CASE("empty time grid returns the initial state") {
    const auto state = fock::basis_state(1, 0, 0);
    const auto res = fock::evolve(state, 1.0, 0.0, {});
    CHECK(res.series.t.empty());
    CHECK(res.final_state.norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("invalid basis occupations are rejected") {
    CHECK_THROWS_AS(fock::basis_state(-1, 0, 0), ConfigError);
    CHECK_THROWS_AS(fock::coherent_graviton_state(-0.5, 10), ConfigError);
}

TEST_CASE("parallel kernel is byte-identical to the serial reference") {
    const auto state = fock::coherent_graviton_state(std::sqrt(5.0), 25);
    const auto times = linspace(0.0, 4.0, 37);
    const auto serial = fock::evolve_serial(state, 1.0, 0.05, times);

    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 3, 7}) {
        omp_set_num_threads(threads);
        const auto par = fock::evolve(state, 1.0, 0.05, times);
        CAPTURE(threads);
        REQUIRE(par.series.t.size() == serial.series.t.size());
        for (std::size_t i = 0; i < times.size(); ++i) {
            CHECK(par.series.n_b[i] == serial.series.n_b[i]);
            CHECK(par.series.n_alpha[i] == serial.series.n_alpha[i]);
            CHECK(par.series.n_c[i] == serial.series.n_c[i]);
            CHECK(par.series.purity[i] == serial.series.purity[i]);
            CHECK(par.series.entropy[i] == serial.series.entropy[i]);
            CHECK(par.series.norm_drift[i] == serial.series.norm_drift[i]);
        }
    }
    omp_set_num_threads(saved);
}

}  // TEST_SUITE
