#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace gpmix::fock {

// Three-mode Fock basis |n_b, n_alpha, n_c> for the trilinear interaction
//   H / hbar = g (b a_alpha^dag a_c^dag + h.c.) + delta n_b,
// which conserves M = 2 n_b + n_alpha + n_c and N = n_alpha - n_c.

struct FockTriple {
    std::int64_t n_b = 0;
    std::int64_t n_alpha = 0;
    std::int64_t n_c = 0;

    friend bool operator==(const FockTriple&, const FockTriple&) = default;
};

// Basis of the conserved-charge sector (M, N), ordered by descending n_b.
struct FockSector {
    std::int64_t M = 0;
    std::int64_t N = 0;
    std::vector<FockTriple> basis;

    std::int64_t dim() const { return static_cast<std::int64_t>(basis.size()); }
};

// Sector dimension: (M - |N|)/2 + 1 when M - |N| is even and non-negative,
// otherwise 0.
std::int64_t sector_dimension(std::int64_t M, std::int64_t N);

FockSector build_sector(std::int64_t M, std::int64_t N);

// Real symmetric tridiagonal sector Hamiltonian (units of rad/s): diagonal
// delta * n_b; off-diagonal between (n_b, n_alpha, n_c) and
// (n_b - 1, n_alpha + 1, n_c + 1) equal to g sqrt(n_b (n_alpha+1)(n_c+1)).
Eigen::MatrixXd sector_hamiltonian(const FockSector& sector, double g, double delta);

}  // namespace gpmix::fock
