#pragma once

#include <map>
#include <vector>

#include "xxnet/network.hpp"

namespace xxnet {

/// Proper coloring of the thresholded graph: no two adjacent nodes share a
/// color. Produced greedily in node-index order with the smallest feasible
/// color, so it is deterministic.
struct Coloring {
    std::vector<int> color;  // per node, 0-based color ids
    int num_colors = 0;
};

Coloring greedy_coloring(const AdjacencyMatrix& adj);

/// Community assignment from label propagation. Labels are integers,
/// initialised to the node index (1-based). Isolated nodes keep their own
/// singleton labels and are listed separately; by default they do not enter
/// the community census.
struct Labeling {
    std::vector<int> label;     // per node, 1-based
    std::vector<int> isolated;  // 1-based node ids with no links
    bool include_isolated = false;
    int sweeps = 0;  // full color sweeps until the labeling stopped changing
};

struct LpaOptions {
    bool weighted = true;
    bool include_isolated = false;
    int max_sweeps = 1000;
    double tie_tol = 1e-12;  // weighted frequencies within tie_tol count as tied
};

/// Semi-synchronous label propagation: all nodes of one color class update
/// simultaneously, classes swept in ascending color id, until a full sweep
/// changes no label. Label frequency of a neighbour label is the sum of edge
/// weights (weighted) or the neighbour count (unweighted). Ties resolve by
/// Prec-Max: keep the current label if it is among the most frequent,
/// otherwise take the largest tied label. Throws ConvergenceError with the
/// oscillating node set if max_sweeps is exhausted.
Labeling lpa_detect(const WeightedNetwork& net, const LpaOptions& options = {});

struct CommunityCensus {
    int n_c = 0;                       // number of communities
    std::vector<int> sizes;            // descending
    double mean_size = 0.0;            // s_bar_c
    std::map<int, int> size_histogram;
    int isolated_nodes = 0;
};

CommunityCensus community_census(const Labeling& lab);

}  // namespace xxnet
