#include "gpmix/overlap.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "gpmix/quadrature.hpp"
#include "gpmix/structure_functions.hpp"

namespace gpmix::gw {

namespace {

using std::complex;

// Axis factors of the mode field and its curl at one coordinate value, for
// one mode: field uses cos on the "own" axis and sin elsewhere; the curl the
// other way round.
struct AxisFactors {
    double c = 0.0;
    double s = 0.0;
};

inline AxisFactors axis_factors(double k, double r) {
    return {std::cos(k * r), std::sin(k * r)};
}

inline Eigen::Vector3d assemble(const Eigen::Vector3d& coeff, const AxisFactors f[3],
                                bool cos_on_own_axis) {
    Eigen::Vector3d out;
    for (int i = 0; i < 3; ++i) {
        double v = coeff[i] * (cos_on_own_axis ? f[i].c : f[i].s);
        for (int j = 0; j < 3; ++j) {
            if (j != i) v *= (cos_on_own_axis ? f[j].s : f[j].c);
        }
        out[i] = v;
    }
    return out;
}

complex<double> integrand_from_fields(const Eigen::Vector3d& u_a, const Eigen::Vector3d& cu_a,
                                      const Eigen::Vector3d& u_b, const Eigen::Vector3d& cu_b,
                                      double k_a, double k_b, const Eigen::Vector3d& K,
                                      const Eigen::Matrix3d& e, const Eigen::Vector3d& x) {
    const double u = K.dot(x);
    const double F0 = f0(u);
    const double F1 = f1(u);
    const double F2 = f2(u);
    const double K2 = K.squaredNorm();
    const double Kmag = std::sqrt(K2);

    // P_ij = (curl u_a)_i (curl u_b)_j/(k_a k_b) - u_a,i u_b,j, contracted
    // against Xi_ijkl x_k x_l without forming the rank-4 tensor:
    //   P.K terms and trace terms only.
    const Eigen::Vector3d cab = cu_a / k_a;
    const Eigen::Vector3d cbb = cu_b / k_b;
    const double trP = cab.dot(cbb) - u_a.dot(u_b);
    const Eigen::Vector3d PK = cab * cbb.dot(K) - u_a * u_b.dot(K);   // P K
    const Eigen::Vector3d PtK = cbb * cab.dot(K) - u_b * u_a.dot(K);  // P^T K
    const double xK = u;                      // K.x
    const Eigen::Vector3d ex = e * x;
    const double exx = x.dot(ex);             // x.e.x
    const double eP = cab.dot(e * cbb) - u_a.dot(e * u_b);  // e:P
    const double ePKQK = eP * xK * xK;        // (e:P)(K.Q K) with Q = x x^T
    const double a1 = PK.dot(ex) * xK;        // (PK).e.(QK)
    const double a2 = PtK.dot(ex) * xK;       // (QK).e.(P^T K)
    const double a4 = K.dot(PK) * exx;        // (K.P K)(e:Q)
    const double xi_contract =
        -F2 * (a1 + a2 - ePKQK - a4) + 0.5 * K2 * (F0 - F2) * trP * exx;

    // Magnetic cross-term: w = u_a x (curl u_b), contribution
    //   -(i/(2 k_b)) |K| f1 [ (w.K)(x.e.x) - (K.x)(w.e.x) ].
    const Eigen::Vector3d w = u_a.cross(cu_b);
    const double gamma_contract = Kmag * F1 * (w.dot(K) * exx - xK * w.dot(ex));

    return complex<double>(0.25 * xi_contract, -0.5 / k_b * gamma_contract);
}

struct Workspace {
    ModeEval ma;
    ModeEval mb;
    Eigen::Vector3d K;
    Eigen::Matrix3d e;
    Eigen::Vector3d origin;
};

complex<double> point_value(const Workspace& ws, const Eigen::Vector3d& pos) {
    AxisFactors fa[3], fb[3];
    for (int i = 0; i < 3; ++i) {
        fa[i] = axis_factors(ws.ma.k[i], pos[i]);
        fb[i] = axis_factors(ws.mb.k[i], pos[i]);
    }
    const Eigen::Vector3d u_a = ws.ma.norm * assemble(ws.ma.amp, fa, true);
    const Eigen::Vector3d u_b = ws.mb.norm * assemble(ws.mb.amp, fb, true);
    const Eigen::Vector3d cu_a = ws.ma.norm * assemble(ws.ma.k.cross(ws.ma.amp), fa, false);
    const Eigen::Vector3d cu_b = ws.mb.norm * assemble(ws.mb.k.cross(ws.mb.amp), fb, false);
    return integrand_from_fields(u_a, cu_a, u_b, cu_b, ws.ma.kmag, ws.mb.kmag, ws.K, ws.e,
                                 pos - ws.origin);
}

// Inner yz-plane sum for one x node; identical code path for the serial and
// parallel variants so their arithmetic matches bit for bit.
complex<double> slab_sum(const Workspace& ws, double x, double wx, const GaussRule& gy,
                         const GaussRule& gz) {
    complex<double> acc(0.0, 0.0);
    for (std::size_t iy = 0; iy < gy.nodes.size(); ++iy) {
        for (std::size_t iz = 0; iz < gz.nodes.size(); ++iz) {
            const Eigen::Vector3d pos(x, gy.nodes[iy], gz.nodes[iz]);
            acc += (wx * gy.weights[iy] * gz.weights[iz]) * point_value(ws, pos);
        }
    }
    return acc;
}

complex<double> integrate_once(const Workspace& ws, const modes::CavityGeometry& geom,
                               int order, bool parallel) {
    const GaussRule gx = gauss_legendre(order, 0.0, geom.lx);
    const GaussRule gy = gauss_legendre(order, 0.0, geom.ly);
    const GaussRule gz = gauss_legendre(order, 0.0, geom.lz);

    std::vector<complex<double>> partial(order);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int ix = 0; ix < order; ++ix) {
            partial[ix] = slab_sum(ws, gx.nodes[ix], gx.weights[ix], gy, gz);
        }
    } else {
        for (int ix = 0; ix < order; ++ix) {
            partial[ix] = slab_sum(ws, gx.nodes[ix], gx.weights[ix], gy, gz);
        }
    }
    complex<double> total(0.0, 0.0);
    for (int ix = 0; ix < order; ++ix) total += partial[ix];
    return total;
}

OverlapResult run_overlap(const modes::CavityGeometry& geom, const modes::ModeIndex& mode_a,
                          const modes::ModeIndex& mode_b, const Eigen::Vector3d& K,
                          const Eigen::Matrix3d& e, const Eigen::Vector3d& origin,
                          const QuadratureSpec& spec, bool parallel) {
    modes::validate(geom);
    Workspace ws{make_mode_eval(geom, mode_a), make_mode_eval(geom, mode_b), K, e, origin};

    OverlapResult result;
    int order = spec.order < 2 ? 2 : spec.order;
    complex<double> prev = integrate_once(ws, geom, order, parallel);
    for (int step = 0; step < spec.max_doublings; ++step) {
        const int next_order = order * 2;
        const complex<double> next = integrate_once(ws, geom, next_order, parallel);
        if (std::abs(next - prev) <= spec.rtol * std::abs(next) + spec.atol) {
            result.value = next;
            result.previous = prev;
            result.order_used = next_order;
            result.converged = true;
            return result;
        }
        prev = next;
        order = next_order;
    }
    // Not converged: report the two finest estimates and leave the flag unset.
    result.value = prev;
    result.previous = integrate_once(ws, geom, order / 2, parallel);
    result.order_used = order;
    result.converged = false;
    return result;
}

}  // namespace

ModeEval make_mode_eval(const modes::CavityGeometry& geom, const modes::ModeIndex& idx) {
    ModeEval ev;
    ev.k = modes::wavevector(geom, idx);
    ev.amp = Eigen::Vector3d(ev.k.y(), -ev.k.x(), 0.0);
    ev.norm = modes::mode_normalization(geom, idx);
    ev.kmag = ev.k.norm();
    return ev;
}

std::complex<double> overlap_integrand(const ModeEval& mode_a, const ModeEval& mode_b,
                                       const Eigen::Vector3d& K, const Eigen::Matrix3d& e,
                                       const Eigen::Vector3d& origin,
                                       const Eigen::Vector3d& pos) {
    Workspace ws{mode_a, mode_b, K, e, origin};
    return point_value(ws, pos);
}

OverlapResult overlap_integral(const modes::CavityGeometry& geom,
                               const modes::ModeIndex& mode_a, const modes::ModeIndex& mode_b,
                               const Eigen::Vector3d& K, const Eigen::Matrix3d& e,
                               const Eigen::Vector3d& origin, const QuadratureSpec& spec) {
    return run_overlap(geom, mode_a, mode_b, K, e, origin, spec, /*parallel=*/true);
}

OverlapResult overlap_integral_serial(const modes::CavityGeometry& geom,
                                      const modes::ModeIndex& mode_a,
                                      const modes::ModeIndex& mode_b,
                                      const Eigen::Vector3d& K, const Eigen::Matrix3d& e,
                                      const Eigen::Vector3d& origin,
                                      const QuadratureSpec& spec) {
    return run_overlap(geom, mode_a, mode_b, K, e, origin, spec, /*parallel=*/false);
}

}  // namespace gpmix::gw
