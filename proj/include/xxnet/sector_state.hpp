#pragma once

#include <Eigen/Dense>

namespace xxnet {

/// Exact ground state of the open XX chain in magnetisation sector k,
/// described by its occupied single-particle modes. Fermion occupation is
/// identified with a flipped (down) spin; the k = 0 ground state is all-up.
/// The state depends on (n, k) only, never on the field.
struct SectorState {
    int n = 0;         // spins
    int k = 0;         // flipped-spin count, 0 <= k <= n
    Eigen::MatrixXd s; // n x k mode matrix, s(l-1, m-1) = sqrt(2/(n+1)) sin(pi m l / (n+1))
    Eigen::MatrixXd g; // n x n correlation matrix g = s s^T, <c_i^dag c_j>
};

SectorState build_sector_state(int n, int k);

}  // namespace xxnet
