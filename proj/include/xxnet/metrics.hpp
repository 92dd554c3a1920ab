#pragma once

#include <map>
#include <vector>

#include "xxnet/network.hpp"

namespace xxnet {

/// Per-node local measures of a weighted network. Disparity is undefined for
/// isolated nodes (strength zero); `disparity_defined` flags those out and
/// they are excluded from any averages. Clustering of degree < 2 nodes is 0.
struct NodeMetrics {
    std::vector<int> degree;
    std::vector<double> strength;
    std::vector<double> disparity;
    std::vector<bool> disparity_defined;
    std::vector<double> clustering;
    std::vector<double> weighted_clustering;
};

NodeMetrics node_metrics(const WeightedNetwork& net);

struct DegreeStats {
    double mean = 0.0;
    double sigma = 0.0;  // sqrt(<d^2> - <d>^2)
};

DegreeStats degree_stats(const WeightedNetwork& net);

/// Link weights of one node divided by their mean s_i / d_i, sorted
/// ascending. Mean of the rescaled list is 1 by construction.
struct RescaledWeights {
    int node = 0;  // 1-based
    std::vector<double> values;
};

RescaledWeights rescaled_weight_distribution(const WeightedNetwork& net, int node);

/// First Wasserstein distance between two empirical distributions, computed
/// exactly through the quantile coupling of the sorted samples.
double wasserstein_1d(const RescaledWeights& a, const RescaledWeights& b);
double wasserstein_1d_sorted(const std::vector<double>& a, const std::vector<double>& b);

struct MeanPairwiseWasserstein {
    double mean = 0.0;
    long long pairs = 0;
    int excluded_nodes = 0;  // isolated nodes without a weight distribution
};

/// Average of wasserstein_1d over all pairs of non-isolated nodes, summed in
/// fixed (i, j) order with compensated accumulation.
MeanPairwiseWasserstein mean_pairwise_wasserstein(const WeightedNetwork& net);

/// Mean concurrence of present links keyed by link length |i - j|.
/// Lengths with no links are absent from the map.
std::map<int, double> concurrence_by_length(const WeightedNetwork& net);

/// Interior local extrema of a per-node profile. A plateau of equal values
/// flanked on both sides by strictly smaller (larger) values counts as one
/// maximum (minimum) at its midpoint; runs touching the ends are not extrema.
struct ProfileExtrema {
    std::vector<double> maxima;  // positions, 1-based; plateau midpoints may be half-integer
    std::vector<double> minima;
};

ProfileExtrema profile_extrema(const std::vector<double>& values);

}  // namespace xxnet
