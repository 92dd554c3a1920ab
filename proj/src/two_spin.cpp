#include "xxnet/two_spin.hpp"

#include <cmath>

#include <Eigen/LU>

#include "xxnet/errors.hpp"

namespace xxnet {

Eigen::Matrix4d TwoSpinState::density() const {
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    rho(0, 0) = p_uu;
    rho(1, 1) = p_ud;
    rho(2, 2) = p_du;
    rho(3, 3) = p_dd;
    rho(1, 2) = rho(2, 1) = z;
    return rho;
}

namespace detail {

double window_coherence(const Eigen::MatrixXd& g, int i, int j) {
    const int l = j - i;
    if (l == 1) return g(i - 1, j - 1);
    Eigen::MatrixXd m(l, l);
    for (int p = 0; p < l; ++p) {
        const int row = i - 1 + p;  // sites i..j-1
        for (int q = 0; q < l; ++q) {
            const int col = i + q;  // sites i+1..j
            m(p, q) = 2.0 * g(row, col) - (row == col ? 1.0 : 0.0);
        }
    }
    return 0.5 * Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

Eigen::MatrixXd string_core(const Eigen::MatrixXd& s, int i, int j) {
    const int k = static_cast<int>(s.cols());
    Eigen::MatrixXd core = Eigen::MatrixXd::Identity(k, k);
    for (int m = i + 1; m <= j - 1; ++m)
        core.noalias() -= 2.0 * s.row(m - 1).transpose() * s.row(m - 1);
    return core;
}

double mode_coherence(const Eigen::MatrixXd& s, const Eigen::MatrixXd& core, int i, int j) {
    const int k = static_cast<int>(s.cols());
    if (k == 0) return 0.0;
    Eigen::MatrixXd w(k + 1, k + 1);
    w.topLeftCorner(k, k) = core;
    w.block(0, k, k, 1) = s.row(j - 1).transpose();  // S^T D e_j; j outside the string
    w.block(k, 0, 1, k) = s.row(i - 1);              // e_i^T D S; i outside the string
    w(k, k) = 0.0;
    return -Eigen::PartialPivLU<Eigen::MatrixXd>(w).determinant();
}

double gram_pair_det(const Eigen::MatrixXd& s, int i, int j) {
    const int k = static_cast<int>(s.cols());
    double acc = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const double minor = s(i - 1, a) * s(j - 1, b) - s(i - 1, b) * s(j - 1, a);
            acc += minor * minor;
        }
    return acc;
}

}  // namespace detail

static void check_pair(const SectorState& st, int i, int j) {
    if (i < 1 || j > st.n || i >= j)
        throw ValidationError("site pair must satisfy 1 <= i < j <= n");
}

double string_coherence(const SectorState& st, int i, int j) {
    check_pair(st, i, j);
    if (st.k == 0) return 0.0;
    const int l = j - i;
    if (l <= st.k + 1) return detail::window_coherence(st.g, i, j);
    return detail::mode_coherence(st.s, detail::string_core(st.s, i, j), i, j);
}

TwoSpinState two_spin_rdm(const SectorState& st, int i, int j) {
    check_pair(st, i, j);
    TwoSpinState t;
    t.i = i;
    t.j = j;
    const double gii = st.g(i - 1, i - 1);
    const double gjj = st.g(j - 1, j - 1);
    const double gij = st.g(i - 1, j - 1);
    double pdd = gii * gjj - gij * gij;
    if (pdd < 1e-8) pdd = detail::gram_pair_det(st.s, i, j);
    t.p_dd = pdd;
    t.p_du = gii - pdd;
    t.p_ud = gjj - pdd;
    t.p_uu = 1.0 - gii - gjj + pdd;
    t.z = string_coherence(st, i, j);
    return t;
}

}  // namespace xxnet
