#include "xxnet/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "xxnet/errors.hpp"
#include "xxnet/numeric.hpp"
#include "xxnet/parallel.hpp"

namespace xxnet {

NodeMetrics node_metrics(const WeightedNetwork& net) {
    const int n = net.n;
    NodeMetrics m;
    m.degree.assign(n, 0);
    m.strength.assign(n, 0.0);
    m.disparity.assign(n, 0.0);
    m.disparity_defined.assign(n, false);
    m.clustering.assign(n, 0.0);
    m.weighted_clustering.assign(n, 0.0);

    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    double max_w = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double w = net.omega(i, j);
            if (i != j && w > net.tau) {
                nbrs[static_cast<std::size_t>(i)].push_back(j);
                m.degree[static_cast<std::size_t>(i)] += 1;
                m.strength[static_cast<std::size_t>(i)] += w;
                if (w > max_w) max_w = w;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        const double s = m.strength[static_cast<std::size_t>(i)];
        if (s > 0.0) {
            double y = 0.0;
            for (int j : nbrs[static_cast<std::size_t>(i)]) y += net.omega(i, j) * net.omega(i, j);
            m.disparity[static_cast<std::size_t>(i)] = y / (s * s);
            m.disparity_defined[static_cast<std::size_t>(i)] = true;
        }
    }
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t iu) {
        const int i = static_cast<int>(iu);
        const auto& nb = nbrs[iu];
        const int d = static_cast<int>(nb.size());
        if (d < 2) return;
        long long triangles2 = 0;  // ordered neighbour pairs that are linked
        double wsum = 0.0;
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const double wjk = net.omega(nb[a], nb[b]);
                if (wjk > net.tau) {
                    triangles2 += 2;
                    wsum += 2.0 * std::cbrt(net.omega(i, nb[a]) * net.omega(i, nb[b]) * wjk);
                }
            }
        m.clustering[iu] = static_cast<double>(triangles2) / (static_cast<double>(d) * (d - 1));
        m.weighted_clustering[iu] = wsum / (static_cast<double>(d) * (d - 1) * max_w);
    });
    return m;
}

DegreeStats degree_stats(const WeightedNetwork& net) {
    DegreeStats st;
    const int n = net.n;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j)
            if (i != j && net.omega(i, j) > net.tau) ++d;
        sum += d;
        sum2 += static_cast<double>(d) * d;
    }
    st.mean = sum / n;
    st.sigma = std::sqrt(std::max(0.0, sum2 / n - st.mean * st.mean));
    return st;
}

RescaledWeights rescaled_weight_distribution(const WeightedNetwork& net, int node) {
    if (node < 1 || node > net.n) throw ValidationError("rescaled_weight_distribution: bad node");
    RescaledWeights rw;
    rw.node = node;
    double s = 0.0;
    for (int j = 1; j <= net.n; ++j) {
        const double w = net.omega(node - 1, j - 1);
        if (j != node && w > net.tau) {
            rw.values.push_back(w);
            s += w;
        }
    }
    if (rw.values.empty())
        throw ValidationError("rescaled_weight_distribution: node " + std::to_string(node) +
                              " is isolated; distribution undefined");
    const double mean = s / static_cast<double>(rw.values.size());
    for (double& v : rw.values) v /= mean;
    std::sort(rw.values.begin(), rw.values.end());
    return rw;
}

double wasserstein_1d_sorted(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw ValidationError("wasserstein_1d: empty sample");
    // exact quantile coupling of two sorted empirical measures; breakpoint
    // order decided in integer arithmetic
    const std::size_t na = a.size(), nb = b.size();
    std::size_t ia = 0, ib = 0;
    double q = 0.0, dist = 0.0;
    while (ia < na && ib < nb) {
        const unsigned long long ca = static_cast<unsigned long long>(ia + 1) * nb;
        const unsigned long long cb = static_cast<unsigned long long>(ib + 1) * na;
        const double next = ca <= cb ? static_cast<double>(ia + 1) / static_cast<double>(na)
                                     : static_cast<double>(ib + 1) / static_cast<double>(nb);
        dist += (next - q) * std::abs(a[ia] - b[ib]);
        q = next;
        if (ca <= cb) ++ia;
        if (cb <= ca) ++ib;
    }
    return dist;
}

double wasserstein_1d(const RescaledWeights& a, const RescaledWeights& b) {
    return wasserstein_1d_sorted(a.values, b.values);
}

MeanPairwiseWasserstein mean_pairwise_wasserstein(const WeightedNetwork& net) {
    const int n = net.n;
    std::vector<RescaledWeights> dists;
    MeanPairwiseWasserstein out;
    for (int node = 1; node <= n; ++node) {
        bool isolated = true;
        for (int j = 1; j <= n; ++j)
            if (j != node && net.omega(node - 1, j - 1) > net.tau) {
                isolated = false;
                break;
            }
        if (isolated)
            ++out.excluded_nodes;
        else
            dists.push_back(rescaled_weight_distribution(net, node));
    }
    const std::size_t m = dists.size();
    if (m < 2) return out;
    // row sums computed in parallel, combined in fixed order
    std::vector<double> row_sums(m, 0.0);
    parallel_for(m, [&](std::size_t a) {
        KahanSum acc;
        for (std::size_t b = a + 1; b < m; ++b) acc.add(wasserstein_1d(dists[a], dists[b]));
        row_sums[a] = acc.value();
    });
    KahanSum total;
    for (std::size_t a = 0; a < m; ++a) total.add(row_sums[a]);
    out.pairs = static_cast<long long>(m) * static_cast<long long>(m - 1) / 2;
    out.mean = total.value() / static_cast<double>(out.pairs);
    return out;
}

std::map<int, double> concurrence_by_length(const WeightedNetwork& net) {
    std::map<int, std::pair<double, long long>> acc;
    for (int i = 1; i <= net.n; ++i)
        for (int j = i + 1; j <= net.n; ++j) {
            const double w = net.omega(i - 1, j - 1);
            if (w > net.tau) {
                auto& slot = acc[j - i];
                slot.first += w;
                slot.second += 1;
            }
        }
    std::map<int, double> out;
    for (const auto& [len, slot] : acc) out[len] = slot.first / static_cast<double>(slot.second);
    return out;
}

ProfileExtrema profile_extrema(const std::vector<double>& values) {
    if (values.size() < 3) throw ValidationError("profile_extrema: need at least 3 values");
    ProfileExtrema ex;
    const std::size_t n = values.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end + 1 < n && values[end + 1] == values[start]) ++end;
        if (start > 0 && end + 1 < n) {  // interior run with both flanks present
            const bool below_left = values[start - 1] < values[start];
            const bool below_right = values[end + 1] < values[start];
            const bool above_left = values[start - 1] > values[start];
            const bool above_right = values[end + 1] > values[start];
            const double pos = 1.0 + 0.5 * (static_cast<double>(start) + static_cast<double>(end));
            if (below_left && below_right) ex.maxima.push_back(pos);
            if (above_left && above_right) ex.minima.push_back(pos);
        }
        start = end + 1;
    }
    return ex;
}

}  // namespace xxnet
