#pragma once

#include <Eigen/Dense>

#include "xxnet/sector_state.hpp"

namespace xxnet {

/// U(1)-symmetric reduced state of spins (i, j), i < j, 1-based.
/// Populations are ordered (both-up, i-up j-down, i-down j-up, both-down);
/// z is the single coherence <sigma_i^+ sigma_j^->.
struct TwoSpinState {
    int i = 0, j = 0;
    double p_uu = 0, p_ud = 0, p_du = 0, p_dd = 0;
    double z = 0;

    /// 4x4 density matrix in the basis (uu, ud, du, dd).
    Eigen::Matrix4d density() const;
};

/// Coherence <sigma_i^+ sigma_j^-> of the sector ground state, including the
/// Jordan-Wigner string across sites strictly between i and j. Evaluated as
/// a determinant: the (j-i)-sized window of 2G - I when that is the smaller
/// route, otherwise a (k+1)-sized bordered mode determinant.
double string_coherence(const SectorState& st, int i, int j);

/// Exact two-spin reduced state. Populations follow from Wick's theorem on
/// the correlation matrix; the near-singular Gram determinant is evaluated
/// by Cauchy-Binet (a sum of squared 2x2 minors) to avoid cancellation.
TwoSpinState two_spin_rdm(const SectorState& st, int i, int j);

namespace detail {

/// det of the window [i..j-1] x [i+1..j] of Q = 2G - I, halved: the string
/// coherence. O((j-i)^3).
double window_coherence(const Eigen::MatrixXd& g, int i, int j);

/// Same coherence via the bordered mode determinant
/// z = -det([S|e_i]^T D [S|e_j]) with D = -1 strictly between i and j.
/// `core` must hold S^T D S = I_k - 2 sum_{m in (i,j)} s_m s_m^T.
/// O((k+1)^3) given the core.
double mode_coherence(const Eigen::MatrixXd& s, const Eigen::MatrixXd& core, int i, int j);

/// Builds S^T D S for the string interval of the pair (i, j).
Eigen::MatrixXd string_core(const Eigen::MatrixXd& s, int i, int j);

/// det [[G_ii, G_ij], [G_ij, G_jj]] as a sum of squared 2x2 minors of S
/// (Cauchy-Binet). Exactly zero for k < 2, never negative.
double gram_pair_det(const Eigen::MatrixXd& s, int i, int j);

}  // namespace detail
}  // namespace xxnet
