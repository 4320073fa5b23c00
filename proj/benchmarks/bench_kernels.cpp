// Times the OpenMP kernels against the serial reference implementations and
// verifies that both produce byte-identical results. `--quick` shrinks the
// problem sizes so the comparison doubles as a smoke test under ctest.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <omp.h>

#include "gpmix/constants.hpp"
#include "gpmix/coupling.hpp"
#include "gpmix/evolution.hpp"
#include "gpmix/gw_tensors.hpp"
#include "gpmix/geometry.hpp"
#include "gpmix/overlap.hpp"

namespace {

using namespace gpmix;
using Clock = std::chrono::steady_clock;

template <typename F>
double best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    return best;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool bench_overlap(bool quick) {
    const modes::CavityGeometry geom = modes::cubic_geometry_for_sum_frequency(3.9e9);
    const double omega = 2.0 * kPi * 3.9e9;
    const Eigen::Vector3d khat = gw::propagation_direction(0.5 * kPi, kPi / 6.0);
    const Eigen::Vector3d K = (omega / kSpeedOfLight) * khat;
    const Eigen::Matrix3d e = gw::polarization_tensor(khat, gw::Polarization::plus);
    const modes::ModeIndex alpha{1, 1, 1}, beta{2, 1, 1};
    const Eigen::Vector3d origin = Eigen::Vector3d::Zero();

    gw::QuadratureSpec spec;
    spec.order = quick ? 48 : 96;
    spec.max_doublings = 0;  // time a fixed order, no refinement pass

    gw::OverlapResult serial, parallel;
    const double t_serial = best_of(quick ? 1 : 3, [&] {
        serial = gw::overlap_integral_serial(geom, alpha, beta, K, e, origin, spec);
    });
    const double t_parallel = best_of(quick ? 1 : 3, [&] {
        parallel = gw::overlap_integral(geom, alpha, beta, K, e, origin, spec);
    });

    const bool identical = bit_equal(serial.value.real(), parallel.value.real()) &&
                           bit_equal(serial.value.imag(), parallel.value.imag()) &&
                           bit_equal(serial.previous.real(), parallel.previous.real()) &&
                           bit_equal(serial.previous.imag(), parallel.previous.imag());
    std::printf("overlap  order %3d^3          serial %8.3f ms   openmp %8.3f ms   "
                "speedup %4.2fx   %s\n",
                spec.order, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                identical ? "identical" : "MISMATCH");
    return identical;
}

bool bench_evolve(bool quick) {
    const double mean = quick ? 40.0 : 120.0;
    const double eta = std::sqrt(mean);
    const auto cutoff = static_cast<std::int64_t>(std::ceil(eta * eta + 6.0 * eta));
    const fock::QuantumState psi0 = fock::coherent_graviton_state(eta, cutoff, 0, 0);

    const int n_times = quick ? 200 : 800;
    std::vector<double> times(n_times);
    for (int i = 0; i < n_times; ++i) times[i] = 3.0 * i / (n_times - 1);

    fock::EvolveResult serial, parallel;
    const double t_serial = best_of(quick ? 1 : 3, [&] {
        serial = fock::evolve_serial(psi0, 1.0, 0.0, times);
    });
    const double t_parallel = best_of(quick ? 1 : 3, [&] {
        parallel = fock::evolve(psi0, 1.0, 0.0, times);
    });

    bool identical = true;
    auto compare = [&identical](const std::vector<double>& a, const std::vector<double>& b) {
        identical = identical && a.size() == b.size();
        for (std::size_t i = 0; identical && i < a.size(); ++i) {
            identical = bit_equal(a[i], b[i]);
        }
    };
    compare(serial.series.n_b, parallel.series.n_b);
    compare(serial.series.n_alpha, parallel.series.n_alpha);
    compare(serial.series.n_c, parallel.series.n_c);
    compare(serial.series.purity, parallel.series.purity);
    compare(serial.series.entropy, parallel.series.entropy);
    compare(serial.series.norm_drift, parallel.series.norm_drift);
    std::printf("evolve   %3zd sectors x %4d t  serial %8.3f ms   openmp %8.3f ms   "
                "speedup %4.2fx   %s\n",
                serial.final_state.blocks.size(), n_times, 1e3 * t_serial, 1e3 * t_parallel,
                t_serial / t_parallel, identical ? "identical" : "MISMATCH");
    return identical;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--quick") quick = true;
    }
    std::printf("kernel benchmark (%d OpenMP threads%s)\n", omp_get_max_threads(),
                quick ? ", quick mode" : "");
    const bool ok = bench_overlap(quick) & bench_evolve(quick);
    if (!ok) {
        std::fprintf(stderr, "serial and OpenMP kernels disagree\n");
        return 1;
    }
    return 0;
}
