#include "xxnet/lpa.hpp"

#include <algorithm>
#include <unordered_map>

#include "xxnet/errors.hpp"

namespace xxnet {

Coloring greedy_coloring(const AdjacencyMatrix& adj) {
    const int n = static_cast<int>(adj.rows());
    if (adj.cols() != n) throw ValidationError("greedy_coloring: adjacency must be square");
    Coloring col;
    col.color.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    for (int v = 0; v < n; ++v) {
        used.assign(static_cast<std::size_t>(n + 1), 0);
        for (int u = 0; u < n; ++u) {
            if (u == v || !adj(v, u)) continue;
            if (adj(u, v) != adj(v, u))
                throw ValidationError("greedy_coloring: adjacency must be symmetric");
            const int cu = col.color[static_cast<std::size_t>(u)];
            if (cu >= 0) used[static_cast<std::size_t>(cu)] = 1;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        col.color[static_cast<std::size_t>(v)] = c;
        col.num_colors = std::max(col.num_colors, c + 1);
    }
    return col;
}

Labeling lpa_detect(const WeightedNetwork& net, const LpaOptions& options) {
    const int n = net.n;
    const AdjacencyMatrix adj = adjacency(net);
    const Coloring coloring = greedy_coloring(adj);

    std::vector<std::vector<int>> classes(static_cast<std::size_t>(coloring.num_colors));
    for (int v = 0; v < n; ++v)
        classes[static_cast<std::size_t>(coloring.color[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (adj(v, u)) nbrs[static_cast<std::size_t>(v)].push_back(u);

    Labeling lab;
    lab.include_isolated = options.include_isolated;
    lab.label.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        lab.label[static_cast<std::size_t>(v)] = v + 1;
        if (nbrs[static_cast<std::size_t>(v)].empty()) lab.isolated.push_back(v + 1);
    }

    std::vector<int> prev1, prev2;  // previous two global states, oscillation guard
    std::unordered_map<int, double> freq;
    std::vector<std::pair<int, int>> updates;  // (node, new label), committed per class
    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        bool changed = false;
        for (const auto& cls : classes) {
            updates.clear();
            for (int v : cls) {
                const auto& nb = nbrs[static_cast<std::size_t>(v)];
                if (nb.empty()) continue;
                freq.clear();
                for (int u : nb) {
                    const double w = options.weighted ? net.omega(v, u) : 1.0;
                    freq[lab.label[static_cast<std::size_t>(u)]] += w;
                }
                double fmax = 0.0;
                for (const auto& [l, f] : freq) fmax = std::max(fmax, f);
                const double cut = fmax - options.tie_tol;
                const int cur = lab.label[static_cast<std::size_t>(v)];
                bool keep = false;
                int best = 0;
                for (const auto& [l, f] : freq) {
                    if (f < cut) continue;
                    if (l == cur) keep = true;
                    best = std::max(best, l);
                }
                if (!keep && best != cur) updates.emplace_back(v, best);
            }
            for (const auto& [v, l] : updates) {
                lab.label[static_cast<std::size_t>(v)] = l;
                changed = true;
            }
        }
        lab.sweeps = sweep;
        if (!changed) return lab;
        if (!prev2.empty() && lab.label == prev2 && lab.label != prev1) {
            std::vector<int> oscillating;
            for (int v = 0; v < n; ++v)
                if (lab.label[static_cast<std::size_t>(v)] != prev1[static_cast<std::size_t>(v)])
                    oscillating.push_back(v + 1);
            throw ConvergenceError("lpa_detect: labeling oscillates with period 2",
                                   std::move(oscillating));
        }
        prev2 = std::move(prev1);
        prev1 = lab.label;
    }
    throw ConvergenceError("lpa_detect: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps");
}

CommunityCensus community_census(const Labeling& lab) {
    CommunityCensus c;
    c.isolated_nodes = static_cast<int>(lab.isolated.size());
    std::vector<char> skip(lab.label.size(), 0);
    if (!lab.include_isolated)
        for (int v : lab.isolated) skip[static_cast<std::size_t>(v - 1)] = 1;
    std::unordered_map<int, int> counts;
    for (std::size_t v = 0; v < lab.label.size(); ++v)
        if (!skip[v]) counts[lab.label[v]] += 1;
    c.n_c = static_cast<int>(counts.size());
    for (const auto& [l, sz] : counts) {
        c.sizes.push_back(sz);
        c.size_histogram[sz] += 1;
    }
    std::sort(c.sizes.begin(), c.sizes.end(), std::greater<>());
    if (c.n_c > 0) {
        long long total = 0;
        for (int sz : c.sizes) total += sz;
        c.mean_size = static_cast<double>(total) / c.n_c;
    }
    return c;
}

}  // namespace xxnet
