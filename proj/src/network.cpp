#include "xxnet/network.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "xxnet/errors.hpp"
#include "xxnet/io.hpp"
#include "xxnet/parallel.hpp"
#include "xxnet/two_spin.hpp"

namespace xxnet {

namespace {

// Length cutoff below which pairs are always evaluated with the window
// determinant, skipping the separability prefilter.
constexpr int kShortWindow = 24;

struct PairEngine {
    const SectorState& st;       // kappa-reduced state, kappa = min(k, n-k)
    const Eigen::MatrixXd& q2p;  // prefix sums over columns of (2G - I).^2
    double tau;

    // Upper bound on |z| for the window [i..j-1] x [i+1..j]: Hadamard on
    // rows and on columns of a matrix whose full-row norms are exactly 1
    // (2G - I is a reflection), so per-row window mass comes from two
    // prefix-sum lookups. Returns min of the two bounds.
    double coherence_bound(int i, int j) const {
        // prefix differences live in [0, 1] with ~n*eps rounding; the floor
        // keeps the bound valid (never below the true mass) when a row mass
        // underflows the rounding noise
        constexpr double kMassFloor = 1e-12;
        double log_rows = 0.0, log_cols = 0.0;
        for (int a = i; a <= j - 1; ++a) {  // row site a, columns i+1..j
            const double mass = q2p(a - 1, j - 1) - q2p(a - 1, i - 1);
            log_rows += std::log(std::max(mass, kMassFloor));
        }
        for (int c = i + 1; c <= j; ++c) {  // column site c, rows i..j-1
            const double mass = q2p(c - 1, j - 2) - (i >= 2 ? q2p(c - 1, i - 2) : 0.0);
            log_cols += std::log(std::max(mass, kMassFloor));
        }
        return 0.5 * std::exp(0.5 * std::min(log_rows, log_cols));
    }

    // Separability threshold sqrt(p_uu p_dd) of the pair.
    double separability(int i, int j) const {
        const double gii = st.g(i - 1, i - 1);
        const double gjj = st.g(j - 1, j - 1);
        const double gij = st.g(i - 1, j - 1);
        double pdd = gii * gjj - gij * gij;
        if (pdd < 1e-8) pdd = detail::gram_pair_det(st.s, i, j);
        const double puu = 1.0 - gii - gjj + pdd;
        return std::sqrt(std::max(puu, 0.0) * std::max(pdd, 0.0));
    }
};

}  // namespace

WeightedNetwork build_network(int n, int k, double tau) {
    if (n < 1) throw ValidationError("build_network: n must be >= 1");
    if (k < 0 || k > n) throw ValidationError("build_network: k outside [0, n]");
    if (!(tau >= 0.0)) throw ValidationError("build_network: tau must be non-negative");

    WeightedNetwork net;
    net.n = n;
    net.k = k;
    net.tau = tau;
    net.omega = Eigen::MatrixXd::Zero(n, n);

    const int kappa = std::min(k, n - k);  // particle-hole: identical network
    if (kappa == 0) return net;

    const SectorState st = build_sector_state(n, kappa);
    Eigen::MatrixXd q2p(n, n);  // prefix sums of rows of (2G - I).^2
    for (int a = 0; a < n; ++a) {
        double acc = 0.0;
        for (int c = 0; c < n; ++c) {
            const double q = 2.0 * st.g(a, c) - (a == c ? 1.0 : 0.0);
            acc += q * q;
            q2p(a, c) = acc;
        }
    }
    const PairEngine engine{st, q2p, tau};

    // Reflection symmetry: compute pairs with i + j <= n + 1, mirror the rest.
    // Rows are independent; within a row the string core S^T D S marches over
    // j by rank-1 downdates, advanced lazily only when the mode route is hit.
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const int i = static_cast<int>(row) + 1;
        const int j_end = n + 1 - i;
        if (j_end <= i) return;
        Eigen::MatrixXd core = Eigen::MatrixXd::Identity(kappa, kappa);
        int core_j = i + 1;  // core matches the string interval of pair (i, core_j)
        for (int j = i + 1; j <= j_end; ++j) {
            const int l = j - i;
            const double sep = engine.separability(i, j);
            if (l > kShortWindow && engine.coherence_bound(i, j) < sep - 0.1 * tau) continue;
            double z;
            if (l <= kappa + 1) {
                z = detail::window_coherence(st.g, i, j);
            } else {
                while (core_j < j) {  // site core_j enters the string
                    core.noalias() -=
                        2.0 * st.s.row(core_j - 1).transpose() * st.s.row(core_j - 1);
                    ++core_j;
                }
                z = detail::mode_coherence(st.s, core, i, j);
            }
            const double w = 2.0 * std::max(0.0, std::abs(z) - sep);
            if (w >= tau) net.omega(i - 1, j - 1) = w;
        }
    });

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (i + j > n + 1) net.omega(i - 1, j - 1) = net.omega(n - j, n - i);
            net.omega(j - 1, i - 1) = net.omega(i - 1, j - 1);
        }
    return net;
}

AdjacencyMatrix adjacency(const WeightedNetwork& net) {
    AdjacencyMatrix a(net.n, net.n);
    for (int r = 0; r < net.n; ++r)
        for (int c = 0; c < net.n; ++c)
            a(r, c) = (r != c && net.omega(r, c) > net.tau) ? 1 : 0;
    return a;
}

EdgeList to_edge_list(const WeightedNetwork& net) {
    EdgeList list;
    list.n = net.n;
    list.k = net.k;
    list.tau = net.tau;
    for (int i = 1; i <= net.n; ++i)
        for (int j = i + 1; j <= net.n; ++j)
            if (net.omega(i - 1, j - 1) > 0.0) list.edges.push_back({i, j, net.omega(i - 1, j - 1)});
    return list;
}

WeightedNetwork from_edge_list(const EdgeList& list) {
    WeightedNetwork net;
    net.n = list.n;
    net.k = list.k;
    net.tau = list.tau;
    net.omega = Eigen::MatrixXd::Zero(list.n, list.n);
    for (const Edge& e : list.edges) {
        if (e.i < 1 || e.j > list.n || e.i >= e.j)
            throw ValidationError("from_edge_list: edge endpoints out of range");
        net.omega(e.i - 1, e.j - 1) = net.omega(e.j - 1, e.i - 1) = e.w;
    }
    return net;
}

void write_edge_list(std::ostream& os, const EdgeList& list) {
    os << "# " << list.n << ' ' << list.k << ' ' << format_shortest(list.tau) << '\n';
    for (const Edge& e : list.edges)
        os << e.i << ' ' << e.j << ' ' << format_g17(e.w) << '\n';
}

EdgeList read_edge_list(std::istream& is) {
    EdgeList list;
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#')
        throw ValidationError("edge list: missing '# N k tau' header");
    {
        std::istringstream hs(line.substr(1));
        if (!(hs >> list.n >> list.k >> list.tau))
            throw ValidationError("edge list: malformed header");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Edge e;
        if (!(ls >> e.i >> e.j >> e.w)) throw ValidationError("edge list: malformed edge line");
        list.edges.push_back(e);
    }
    return list;
}

}  // namespace xxnet
