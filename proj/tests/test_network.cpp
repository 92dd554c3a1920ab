#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "xxnet/errors.hpp"
#include "xxnet/metrics.hpp"
#include "xxnet/network.hpp"
#include "xxnet/numeric.hpp"
#include "xxnet/oracle.hpp"
#include "xxnet/sector_state.hpp"

using namespace xxnet;

TEST_CASE("k = 1 network has the exact product form") {
    const int n = 180;
    const WeightedNetwork net = build_network(n, 1);
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double ai = 2.0 * sinpi_ratio(i, n + 1) / std::sqrt(n + 1.0);
        for (int j = i + 1; j <= n; ++j) {
            const double aj = 2.0 * sinpi_ratio(j, n + 1) / std::sqrt(n + 1.0);
            worst = std::max(worst, std::abs(net.weight(i, j) - ai * aj));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("k = 0 network is empty, k = 1 complete") {
    const WeightedNetwork empty = build_network(25, 0);
    CHECK(empty.omega.cwiseAbs().maxCoeff() == 0.0);
    const WeightedNetwork complete = build_network(25, 1);
    const AdjacencyMatrix a = adjacency(complete);
    for (int i = 0; i < 25; ++i) {
        int d = 0;
        for (int j = 0; j < 25; ++j) d += a(i, j);
        CHECK(d == 24);
    }
}

TEST_CASE("network weights equal the oracle Wootters concurrence (n <= 9)") {
    double worst = 0.0;
    for (int n = 2; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            const WeightedNetwork net = build_network(n, k);
            const oracle::StateVector sv = oracle::full_state(n, k);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const double c = oracle::wootters_concurrence(oracle::rdm_from_state(sv, i, j));
                    worst = std::max(worst, std::abs(c - net.weight(i, j)));
                }
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("network invariants") {
    const WeightedNetwork net = build_network(64, 19);
    SUBCASE("symmetric, zero diagonal, bounded") {
        CHECK((net.omega - net.omega.transpose()).cwiseAbs().maxCoeff() == 0.0);
        for (int i = 0; i < net.n; ++i) CHECK(net.omega(i, i) == 0.0);
        CHECK(net.omega.minCoeff() >= 0.0);
        CHECK(net.omega.maxCoeff() <= 1.0);
    }
    SUBCASE("entries below tau are exact zeros") {
        for (int i = 0; i < net.n; ++i)
            for (int j = 0; j < net.n; ++j) {
                const double w = net.omega(i, j);
                CHECK((w == 0.0 || w >= net.tau));
            }
    }
    SUBCASE("particle-hole partner is bit-identical") {
        const WeightedNetwork partner = build_network(64, 64 - 19);
        CHECK(net.omega == partner.omega);
    }
    SUBCASE("deterministic rebuild") {
        const WeightedNetwork again = build_network(64, 19);
        CHECK(net.omega == again.omega);
    }
}

TEST_CASE("bit-identical across thread counts") {
    const char* saved = std::getenv("XXNET_THREADS");
    setenv("XXNET_THREADS", "1", 1);
    const WeightedNetwork serial = build_network(90, 23);
    setenv("XXNET_THREADS", "5", 1);
    const WeightedNetwork threaded = build_network(90, 23);
    if (saved)
        setenv("XXNET_THREADS", saved, 1);
    else
        unsetenv("XXNET_THREADS");
    CHECK(serial.omega == threaded.omega);
}

TEST_CASE("link-length locality on the 1-nearest-neighbour plateau") {
    // deep in the m = 1 regime the network is the open chain
    const int n = 200;
    const WeightedNetwork net = build_network(n, 100);
    int max_len = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (net.linked(i, j)) max_len = std::max(max_len, j - i);
    CHECK(max_len == 1);
    const DegreeStats ds = degree_stats(net);
    CHECK(ds.mean == doctest::Approx(2.0 - 2.0 / n).epsilon(1e-12));
}

TEST_CASE("edge list round trip") {
    SUBCASE("two-node example") {
        WeightedNetwork tiny;
        tiny.n = 2;
        tiny.k = 1;
        tiny.omega = Eigen::MatrixXd::Zero(2, 2);
        tiny.omega(0, 1) = tiny.omega(1, 0) = 0.5;
        const EdgeList el = to_edge_list(tiny);
        REQUIRE(el.edges.size() == 1);
        CHECK(el.edges[0].i == 1);
        CHECK(el.edges[0].j == 2);
        CHECK(el.edges[0].w == 0.5);
    }
    SUBCASE("k = 0 gives an empty list") {
        CHECK(to_edge_list(build_network(9, 0)).edges.empty());
    }
    SUBCASE("text format round-trips bit-exactly") {
        const WeightedNetwork net = build_network(20, 7);
        const EdgeList el = to_edge_list(net);
        std::stringstream ss;
        write_edge_list(ss, el);
        std::string header;
        std::getline(ss, header);
        CHECK(header == "# 20 7 1e-10");
        ss.clear();
        ss.seekg(0);
        const EdgeList back = read_edge_list(ss);
        const WeightedNetwork rebuilt = from_edge_list(back);
        CHECK(rebuilt.omega == net.omega);
        CHECK(back.tau == net.tau);
    }
    SUBCASE("round trip on the k = 1 complete network") {
        const WeightedNetwork net = build_network(20, 1);
        std::stringstream ss;
        write_edge_list(ss, to_edge_list(net));
        CHECK(from_edge_list(read_edge_list(ss)).omega == net.omega);
    }
}
