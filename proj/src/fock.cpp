#include "gpmix/fock.hpp"

#include <cmath>
#include <cstdlib>

#include "gpmix/errors.hpp"

namespace gpmix::fock {

std::int64_t sector_dimension(std::int64_t M, std::int64_t N) {
    const std::int64_t r = M - std::llabs(N);
    if (r < 0 || r % 2 != 0) return 0;
    return r / 2 + 1;
}

FockSector build_sector(std::int64_t M, std::int64_t N) {
    FockSector sector;
    sector.M = M;
    sector.N = N;
    const std::int64_t dim = sector_dimension(M, N);
    sector.basis.reserve(dim);
    // n_alpha + n_c = M - 2 n_b with n_alpha - n_c = N; descending n_b.
    const std::int64_t n_b_max = dim == 0 ? -1 : (M - std::llabs(N)) / 2;
    for (std::int64_t n_b = n_b_max; n_b >= 0; --n_b) {
        const std::int64_t rest = M - 2 * n_b;
        sector.basis.push_back({n_b, (rest + N) / 2, (rest - N) / 2});
    }
    return sector;
}

Eigen::MatrixXd sector_hamiltonian(const FockSector& sector, double g, double delta) {
    const auto dim = sector.dim();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        const FockTriple& t = sector.basis[i];
        h(i, i) = delta * static_cast<double>(t.n_b);
        if (i + 1 < dim) {
            // basis[i+1] = (n_b - 1, n_alpha + 1, n_c + 1)
            const double amp = g * std::sqrt(static_cast<double>(t.n_b) *
                                             static_cast<double>(t.n_alpha + 1) *
                                             static_cast<double>(t.n_c + 1));
            h(i, i + 1) = amp;
            h(i + 1, i) = amp;
        }
    }
    return h;
}

}  // namespace gpmix::fock
