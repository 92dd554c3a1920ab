#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "xxnet/sector_state.hpp"

namespace xxnet {

/// Pairwise concurrence network of the sector ground state: nodes are spins,
/// omega(i, j) is the concurrence of the exact two-spin reduced state.
/// Entries below tau are stored as exact zeros.
struct WeightedNetwork {
    int n = 0;
    double tau = 1e-10;
    int k = 0;  // provenance: sector of the state the network was built from
    Eigen::MatrixXd omega;  // n x n, symmetric, zero diagonal, entries in [0, 1]

    bool linked(int i, int j) const { return omega(i - 1, j - 1) > tau; }
    double weight(int i, int j) const { return omega(i - 1, j - 1); }
};

/// Builds the concurrence network for sector k of an n-spin chain.
///
/// The assembly exploits two exact symmetries of the state: particle-hole
/// (sector n-k has the identical network) and spatial reflection
/// (omega(i, j) = omega(n+1-j, n+1-i)), and prunes provably separable
/// long-range pairs with a Hadamard bound on the string determinant before
/// falling back to exact evaluation. Output is deterministic and
/// independent of the thread count.
WeightedNetwork build_network(int n, int k, double tau = 1e-10);

/// Heaviside-thresholded adjacency a(i, j) = 1 iff omega(i, j) > tau.
using AdjacencyMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
AdjacencyMatrix adjacency(const WeightedNetwork& net);

struct Edge {
    int i = 0, j = 0;  // 1-based, i < j
    double w = 0.0;
};

struct EdgeList {
    int n = 0;
    int k = 0;
    double tau = 1e-10;
    std::vector<Edge> edges;  // sorted by (i, j), weights > 0 only
};

EdgeList to_edge_list(const WeightedNetwork& net);
WeightedNetwork from_edge_list(const EdgeList& list);

/// Text format: header "# N k tau", then one "i j weight" line per edge,
/// 17 significant digits (bit-exact round trip).
void write_edge_list(std::ostream& os, const EdgeList& list);
EdgeList read_edge_list(std::istream& is);

}  // namespace xxnet
