#include <doctest.h>

#include <cmath>
#include <random>

#include "xxnet/errors.hpp"
#include "xxnet/metrics.hpp"
#include "xxnet/network.hpp"

using namespace xxnet;

namespace {

WeightedNetwork manual_network(int n, const std::vector<Edge>& edges) {
    EdgeList el;
    el.n = n;
    el.k = 0;
    el.tau = 1e-10;
    el.edges = edges;
    return from_edge_list(el);
}

// The four-node illustration graph: node 1 = "red", neighbours 2 (top),
// 3 (bottom), 4 (left); top-bottom link closes one triangle.
WeightedNetwork toy_graph() {
    return manual_network(4, {{1, 2, 0.2}, {1, 3, 1.0}, {1, 4, 0.6}, {2, 3, 0.4}});
}

}  // namespace

TEST_CASE("local measures on the toy graph") {
    const NodeMetrics m = node_metrics(toy_graph());
    CHECK(m.degree[0] == 3);
    CHECK(m.strength[0] == doctest::Approx(1.8).epsilon(1e-15));
    CHECK(m.clustering[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(m.weighted_clustering[0] == doctest::Approx(0.14362969).epsilon(1e-6));
    CHECK(m.disparity[0] == doctest::Approx(1.4 / 3.24).epsilon(1e-12));  // ~0.4321
}

TEST_CASE("disparity limits") {
    SUBCASE("equal weights give 1/d") {
        const NodeMetrics m =
            node_metrics(manual_network(4, {{1, 2, 0.6}, {1, 3, 0.6}, {1, 4, 0.6}}));
        CHECK(m.disparity[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("degree-1 node has disparity 1") {
        const NodeMetrics m = node_metrics(manual_network(3, {{1, 2, 0.7}}));
        CHECK(m.disparity[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m.disparity[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("isolated node flagged undefined") {
        const NodeMetrics m = node_metrics(manual_network(3, {{1, 2, 0.7}}));
        CHECK(!m.disparity_defined[2]);
        CHECK(m.disparity_defined[0]);
    }
    SUBCASE("bounds 1/d <= Y <= 1 on a real network") {
        const WeightedNetwork net = build_network(50, 13);
        const NodeMetrics m = node_metrics(net);
        for (int v = 0; v < 50; ++v)
            if (m.disparity_defined[static_cast<std::size_t>(v)]) {
                CHECK(m.disparity[static_cast<std::size_t>(v)] >=
                      1.0 / m.degree[static_cast<std::size_t>(v)] - 1e-12);
                CHECK(m.disparity[static_cast<std::size_t>(v)] <= 1.0 + 1e-12);
            }
    }
}

TEST_CASE("clustering edge cases and equal-weight reduction") {
    SUBCASE("degree < 2 gives 0") {
        const NodeMetrics m = node_metrics(manual_network(3, {{1, 2, 0.7}}));
        CHECK(m.clustering[0] == 0.0);
        CHECK(m.weighted_clustering[0] == 0.0);
    }
    SUBCASE("weighted reduces to unweighted for equal weights") {
        // equal-weight 5-node network with a few triangles
        const WeightedNetwork net = manual_network(
            5, {{1, 2, 0.3}, {1, 3, 0.3}, {2, 3, 0.3}, {3, 4, 0.3}, {4, 5, 0.3}, {3, 5, 0.3}});
        const NodeMetrics m = node_metrics(net);
        for (int v = 0; v < 5; ++v)
            CHECK(m.weighted_clustering[static_cast<std::size_t>(v)] ==
                  doctest::Approx(m.clustering[static_cast<std::size_t>(v)]).epsilon(1e-13));
    }
    SUBCASE("equal-weight complete graph has constant unit clustering") {
        std::vector<Edge> edges;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) edges.push_back({i, j, 0.4});
        const NodeMetrics m = node_metrics(manual_network(6, edges));
        for (int v = 0; v < 6; ++v) {
            CHECK(m.clustering[static_cast<std::size_t>(v)] == doctest::Approx(1.0));
            CHECK(m.weighted_clustering[static_cast<std::size_t>(v)] ==
                  doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("degree statistics") {
    SUBCASE("complete graph") {
        const DegreeStats ds = degree_stats(build_network(30, 1));
        CHECK(ds.mean == doctest::Approx(29.0));
        CHECK(ds.sigma == doctest::Approx(0.0));
    }
    SUBCASE("ideal m-band chain closed form") {
        for (int m_band : {1, 2, 3}) {
            const int n = 40;
            std::vector<Edge> edges;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= std::min(n, i + m_band); ++j) edges.push_back({i, j, 0.5});
            const DegreeStats ds = degree_stats(manual_network(n, edges));
            CHECK(ds.mean ==
                  doctest::Approx(2.0 * m_band - m_band * (m_band + 1.0) / n).epsilon(1e-13));
        }
    }
}

TEST_CASE("rescaled weight distributions") {
    SUBCASE("equal weights rescale to ones") {
        const RescaledWeights rw = rescaled_weight_distribution(
            manual_network(4, {{1, 2, 0.6}, {1, 3, 0.6}, {1, 4, 0.6}}), 1);
        REQUIRE(rw.values.size() == 3);
        for (double v : rw.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("length equals degree and mean is 1") {
        const WeightedNetwork net = build_network(60, 9);
        const NodeMetrics m = node_metrics(net);
        for (int node : {1, 17, 30}) {
            const RescaledWeights rw = rescaled_weight_distribution(net, node);
            CHECK(static_cast<int>(rw.values.size()) == m.degree[static_cast<std::size_t>(node - 1)]);
            double s = 0.0;
            for (double v : rw.values) s += v;
            CHECK(s / rw.values.size() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("isolated node is an error") {
        CHECK_THROWS_AS(rescaled_weight_distribution(manual_network(3, {{1, 2, 0.7}}), 3),
                        ValidationError);
    }
}

TEST_CASE("wasserstein_1d") {
    auto rw = [](std::vector<double> v) {
        RescaledWeights r;
        r.values = std::move(v);
        std::sort(r.values.begin(), r.values.end());
        return r;
    };
    CHECK(wasserstein_1d(rw({0.3, 0.8, 1.1}), rw({0.3, 0.8, 1.1})) == 0.0);
    CHECK(wasserstein_1d(rw({0.25}), rw({0.75})) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(wasserstein_1d(rw({0.0, 1.0}), rw({0.5, 0.5})) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(wasserstein_1d_sorted({}, {0.5}), ValidationError);

    SUBCASE("metric properties on random samples") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> uni(0.0, 2.0);
        for (int trial = 0; trial < 200; ++trial) {
            auto sample = [&](int len) {
                std::vector<double> v(static_cast<std::size_t>(len));
                for (double& x : v) x = uni(rng);
                std::sort(v.begin(), v.end());
                return v;
            };
            const auto a = sample(3 + trial % 5), b = sample(2 + trial % 7), c = sample(4);
            const double ab = wasserstein_1d_sorted(a, b);
            const double ba = wasserstein_1d_sorted(b, a);
            const double ac = wasserstein_1d_sorted(a, c);
            const double cb = wasserstein_1d_sorted(c, b);
            CHECK(ab == doctest::Approx(ba).epsilon(1e-13));
            CHECK(ab >= 0.0);
            CHECK(ab <= ac + cb + 1e-12);
            CHECK(wasserstein_1d_sorted(a, a) == 0.0);
        }
    }
}

TEST_CASE("mean pairwise wasserstein") {
    SUBCASE("identical weight multisets give zero") {
        std::vector<Edge> edges;  // 4-cycle with equal weights: all nodes identical
        edges = {{1, 2, 0.4}, {2, 3, 0.4}, {3, 4, 0.4}, {1, 4, 0.4}};
        const MeanPairwiseWasserstein r = mean_pairwise_wasserstein(manual_network(4, edges));
        CHECK(r.mean == doctest::Approx(0.0));
        CHECK(r.pairs == 6);
        CHECK(r.excluded_nodes == 0);
    }
    SUBCASE("isolated nodes are excluded and counted") {
        const MeanPairwiseWasserstein r =
            mean_pairwise_wasserstein(manual_network(4, {{1, 2, 0.4}, {2, 3, 0.2}}));
        CHECK(r.excluded_nodes == 1);
        CHECK(r.pairs == 3);
    }
}

TEST_CASE("mean pairwise wasserstein grows from k = 1 toward mid-range k") {
    const MeanPairwiseWasserstein near_critical = mean_pairwise_wasserstein(build_network(180, 1));
    const MeanPairwiseWasserstein mid = mean_pairwise_wasserstein(build_network(180, 30));
    CHECK(near_critical.mean < mid.mean);
    CHECK(near_critical.mean < 0.2 * mid.mean);  // k = 1 sits far below mid-range
}

TEST_CASE("global sums") {
    const WeightedNetwork net = build_network(48, 17);
    const NodeMetrics m = node_metrics(net);
    double ssum = 0.0;
    long long dsum = 0;
    for (int v = 0; v < net.n; ++v) {
        ssum += m.strength[static_cast<std::size_t>(v)];
        dsum += m.degree[static_cast<std::size_t>(v)];
    }
    double wsum = 0.0;
    for (int i = 1; i <= net.n; ++i)
        for (int j = i + 1; j <= net.n; ++j) wsum += net.weight(i, j);
    CHECK(ssum == doctest::Approx(2.0 * wsum).epsilon(1e-12));
    CHECK(dsum % 2 == 0);
}

TEST_CASE("concurrence by length") {
    SUBCASE("k = 1 links every distance") {
        const auto by_len = concurrence_by_length(build_network(24, 1));
        for (int l = 1; l <= 23; ++l) {
            REQUIRE(by_len.count(l) == 1);
            CHECK(by_len.at(l) > 0.0);
        }
    }
    SUBCASE("empty network gives an empty map") {
        CHECK(concurrence_by_length(build_network(12, 0)).empty());
    }
}

TEST_CASE("profile extrema") {
    SUBCASE("monotone array has none") {
        const ProfileExtrema e = profile_extrema({1.0, 2.0, 3.0, 4.0});
        CHECK(e.maxima.empty());
        CHECK(e.minima.empty());
    }
    SUBCASE("plateau counts once at its midpoint") {
        const ProfileExtrema e = profile_extrema({0.0, 1.0, 1.0, 0.0});
        REQUIRE(e.maxima.size() == 1);
        CHECK(e.maxima[0] == doctest::Approx(2.5));
        const ProfileExtrema e2 = profile_extrema({1.0, 0.0, 0.0, 1.0});
        REQUIRE(e2.minima.size() == 1);
        CHECK(e2.minima[0] == doctest::Approx(2.5));
    }
    SUBCASE("boundary runs are not extrema") {
        const ProfileExtrema e = profile_extrema({2.0, 1.0, 2.0});
        CHECK(e.maxima.empty());
        REQUIRE(e.minima.size() == 1);
        CHECK(e.minima[0] == doctest::Approx(2.0));
    }
    SUBCASE("too short") { CHECK_THROWS_AS(profile_extrema({1.0, 2.0}), ValidationError); }
}
