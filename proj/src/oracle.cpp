#include "xxnet/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "xxnet/chain.hpp"
#include "xxnet/errors.hpp"
#include "xxnet/sector_state.hpp"

namespace xxnet {
namespace oracle {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

static void check_config(int n, int k, const BasisConfig& config) {
    if (static_cast<int>(config.size()) != k)
        throw ValidationError("config size does not match sector k");
    int prev = 0;
    for (int site : config) {
        if (site <= prev || site > n)
            throw ValidationError("config sites must be strictly increasing in [1, n]");
        prev = site;
    }
}

double amplitude(int n, int k, const BasisConfig& config) {
    if (n < 1 || k < 0 || k > n) throw ValidationError("amplitude: invalid (n, k)");
    check_config(n, k, config);
    if (k == 0) return 1.0;
    const SectorState st = build_sector_state(n, k);
    Eigen::MatrixXd m(k, k);
    for (int a = 0; a < k; ++a) m.row(a) = st.s.row(config[static_cast<std::size_t>(a)] - 1);
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

static std::vector<BasisConfig> enumerate_configs(int n, int k) {
    std::vector<BasisConfig> out;
    BasisConfig cur(static_cast<std::size_t>(k));
    // lexicographic enumeration of k-subsets of [1, n]
    for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(cur);
        int t = k - 1;
        while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++cur[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u)
            cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

StateVector full_state(int n, int k, std::int64_t config_cap) {
    if (n < 1 || k < 0 || k > n) throw ValidationError("full_state: invalid (n, k)");
    const std::int64_t dim = binomial(n, k);
    if (dim > config_cap)
        throw SizeCapError("full_state: C(n, k) = " + std::to_string(dim) + " exceeds cap");
    StateVector sv;
    sv.n = n;
    sv.k = k;
    sv.configs = enumerate_configs(n, k);
    sv.amplitudes.resize(static_cast<Eigen::Index>(sv.configs.size()));
    if (k == 0) {
        sv.amplitudes(0) = 1.0;
        return sv;
    }
    const SectorState st = build_sector_state(n, k);
    Eigen::MatrixXd m(k, k);
    for (std::size_t c = 0; c < sv.configs.size(); ++c) {
        for (int a = 0; a < k; ++a) m.row(a) = st.s.row(sv.configs[c][static_cast<std::size_t>(a)] - 1);
        sv.amplitudes(static_cast<Eigen::Index>(c)) =
            Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
    }
    return sv;
}

static std::uint64_t config_mask(const BasisConfig& config) {
    std::uint64_t m = 0;
    for (int site : config) m |= std::uint64_t{1} << (site - 1);
    return m;
}

Eigen::Matrix4d rdm_from_state(const StateVector& state, int i, int j) {
    if (i < 1 || j > state.n || i >= j)
        throw ValidationError("rdm_from_state: need 1 <= i < j <= n");
    const std::uint64_t bi = std::uint64_t{1} << (i - 1);
    const std::uint64_t bj = std::uint64_t{1} << (j - 1);
    // group amplitudes by the configuration outside (i, j); a set bit means
    // a flipped (down) spin, so local index 0 = uu, 1 = ud, 2 = du, 3 = dd
    std::unordered_map<std::uint64_t, std::array<double, 4>> groups;
    groups.reserve(state.configs.size());
    for (std::size_t c = 0; c < state.configs.size(); ++c) {
        const std::uint64_t m = config_mask(state.configs[c]);
        const int local = ((m & bi) ? 2 : 0) + ((m & bj) ? 1 : 0);
        auto& slot = groups[m & ~(bi | bj)];
        slot[static_cast<std::size_t>(local)] += state.amplitudes(static_cast<Eigen::Index>(c));
    }
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    for (const auto& [rest, amp] : groups)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                rho(a, b) += amp[static_cast<std::size_t>(a)] * amp[static_cast<std::size_t>(b)];
    return rho;
}

double concurrence_x_form(double p_uu, double p_dd, double z) {
    return 2.0 * std::max(0.0, std::abs(z) - std::sqrt(std::max(p_uu, 0.0) * std::max(p_dd, 0.0)));
}

double wootters_concurrence(const Eigen::Matrix4d& rho) {
    if (std::abs(rho.trace() - 1.0) > 1e-8)
        throw ValidationError("wootters_concurrence: trace differs from 1 beyond tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> psd(0.5 * (rho + rho.transpose()));
    if (psd.eigenvalues().minCoeff() < -1e-8)
        throw ValidationError("wootters_concurrence: matrix is not PSD within tolerance");
    Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();  // sigma_y (x) sigma_y
    flip(0, 3) = flip(3, 0) = -1.0;
    flip(1, 2) = flip(2, 1) = 1.0;
    // For real rho, eig(rho rho~) = eig((rho F)^2), so the Wootters lambdas
    // are |eig(rho F)|. rho F only permutes and flips signs of columns, which
    // keeps exact zero entries exact and the eigenvalue errors linear in eps
    // (the squared product would take sqrt-amplified noise near zero).
    const Eigen::Matrix4d rf = rho * flip;
    Eigen::EigenSolver<Eigen::Matrix4d> es(rf, /*computeEigenvectors=*/false);
    std::array<double, 4> lam{};
    for (int t = 0; t < 4; ++t)
        lam[static_cast<std::size_t>(t)] = std::abs(es.eigenvalues()(t).real());
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

SectorEigen diagonalize_sector(int n, int k, double b, std::int64_t dim_cap) {
    if (n < 1 || k < 0 || k > n) throw ValidationError("diagonalize_sector: invalid (n, k)");
    if (sector_for_field(n, b) != k)
        throw ValidationError("diagonalize_sector: b is not strictly inside the sector-k region");
    const std::int64_t dim = binomial(n, k);
    if (dim > dim_cap)
        throw SizeCapError("diagonalize_sector: sector dimension " + std::to_string(dim) +
                           " exceeds cap for dense diagonalisation");
    auto configs = enumerate_configs(n, k);
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(configs.size());
    for (std::size_t c = 0; c < configs.size(); ++c)
        index[config_mask(configs[c])] = static_cast<int>(c);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const double diag = -b * (n - 2.0 * k);  // field term, constant in the sector
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const std::uint64_t m = config_mask(configs[c]);
        const int col = static_cast<int>(c);
        h(col, col) = diag;
        for (int site = 1; site < n; ++site) {
            const std::uint64_t pair = (std::uint64_t{3} << (site - 1));
            const std::uint64_t bits = m & pair;
            if (bits != 0 && bits != pair) {  // exactly one flipped spin on the bond
                const int row = index.at(m ^ pair);
                h(row, col) += -1.0;  // -(sigma^+ sigma^- + h.c.) hop
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (dim > 1 && es.eigenvalues()(1) - es.eigenvalues()(0) < 1e-10)
        throw DegeneracyError("diagonalize_sector: lowest eigenvalue degenerate within 1e-10");
    SectorEigen out;
    out.energy = es.eigenvalues()(0);
    out.state.n = n;
    out.state.k = k;
    out.state.configs = std::move(configs);
    out.state.amplitudes = es.eigenvectors().col(0);
    return out;
}

}  // namespace oracle
}  // namespace xxnet
