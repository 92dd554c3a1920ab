#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace xxnet {
namespace oracle {

/// Flipped-site configuration, strictly increasing 1-based indices.
using BasisConfig = std::vector<int>;

/// Explicit sector ground state: one real amplitude per C(n, k) config,
/// configs enumerated in lexicographic order.
struct StateVector {
    int n = 0;
    int k = 0;
    std::vector<BasisConfig> configs;
    Eigen::VectorXd amplitudes;
};

std::int64_t binomial(int n, int k);

/// Ground-state amplitude A_{l1..lk} = det M with M(a, b) = S_{l_a}^{b+1}:
/// the determinant built from the occupied modes at the flipped sites.
double amplitude(int n, int k, const BasisConfig& config);

/// All amplitudes of the sector ground state. Throws SizeCapError when
/// C(n, k) exceeds config_cap.
StateVector full_state(int n, int k, std::int64_t config_cap = 2000000);

/// Reduced density matrix of spins (i, j), i < j, by brute-force partial
/// trace. Basis order (uu, ud, du, dd).
Eigen::Matrix4d rdm_from_state(const StateVector& state, int i, int j);

/// Wootters concurrence of an arbitrary two-qubit density matrix.
/// Validates PSD and unit trace to 1e-8 before evaluating.
double wootters_concurrence(const Eigen::Matrix4d& rho);

/// Closed form for U(1)-symmetric states: 2 max(0, |z| - sqrt(p_uu p_dd)).
double concurrence_x_form(double p_uu, double p_dd, double z);

struct SectorEigen {
    double energy = 0.0;
    StateVector state;
};

/// Lowest eigenpair of the XX Hamiltonian restricted to the magnetisation-k
/// sector, by dense diagonalisation. b must lie strictly inside the sector-k
/// field region. Throws DegeneracyError if the lowest eigenvalue is
/// degenerate within 1e-10 and SizeCapError when C(n, k) > dim_cap.
SectorEigen diagonalize_sector(int n, int k, double b, std::int64_t dim_cap = 4096);

}  // namespace oracle
}  // namespace xxnet
