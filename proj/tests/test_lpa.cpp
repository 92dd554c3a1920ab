#include <doctest.h>

#include <set>

#include "xxnet/errors.hpp"
#include "xxnet/lpa.hpp"
#include "xxnet/network.hpp"

using namespace xxnet;

namespace {

WeightedNetwork manual_network(int n, const std::vector<Edge>& edges) {
    EdgeList el;
    el.n = n;
    el.tau = 1e-10;
    el.edges = edges;
    return from_edge_list(el);
}

}  // namespace

TEST_CASE("greedy coloring") {
    SUBCASE("path of 4 is 2-colorable") {
        const auto net = manual_network(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
        CHECK(greedy_coloring(adjacency(net)).num_colors == 2);
    }
    SUBCASE("complete graph needs n colors") {
        std::vector<Edge> edges;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) edges.push_back({i, j, 1.0});
        CHECK(greedy_coloring(adjacency(manual_network(4, edges))).num_colors == 4);
    }
    SUBCASE("2-band chain uses at most 3 colors") {
        std::vector<Edge> edges;
        const int n = 20;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= std::min(n, i + 2); ++j) edges.push_back({i, j, 1.0});
        CHECK(greedy_coloring(adjacency(manual_network(n, edges))).num_colors <= 3);
    }
    SUBCASE("proper on a concurrence network") {
        const WeightedNetwork net = build_network(40, 13);
        const AdjacencyMatrix adj = adjacency(net);
        const Coloring col = greedy_coloring(adj);
        for (int u = 0; u < net.n; ++u)
            for (int v = 0; v < net.n; ++v)
                if (adj(u, v))
                    CHECK(col.color[static_cast<std::size_t>(u)] !=
                          col.color[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("lpa on simple graphs") {
    SUBCASE("two disjoint triangles") {
        const auto net = manual_network(
            6, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {4, 5, 1}, {5, 6, 1}, {4, 6, 1}});
        const CommunityCensus c = community_census(lpa_detect(net));
        CHECK(c.n_c == 2);
        REQUIRE(c.sizes.size() == 2);
        CHECK(c.sizes[0] == 3);
        CHECK(c.sizes[1] == 3);
    }
    SUBCASE("4-node path, unweighted: frozen fixed point") {
        // hand-executed schedule: color classes {1,3} then {2,4};
        // first sweep sends 1 -> label 2 and 3 -> label 4, then nothing moves
        const auto net = manual_network(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
        LpaOptions opt;
        opt.weighted = false;
        const Labeling lab = lpa_detect(net, opt);
        CHECK(lab.label == std::vector<int>{2, 2, 4, 4});
        const Labeling again = lpa_detect(net, opt);
        CHECK(again.label == lab.label);  // deterministic
    }
    SUBCASE("single community census") {
        const auto net = manual_network(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
        const CommunityCensus c = community_census(lpa_detect(net));
        CHECK(c.n_c == 1);
        CHECK(c.mean_size == doctest::Approx(3.0));
    }
}

TEST_CASE("weighted lpa finds k communities on sector networks") {
    for (int n : {20, 50}) {
        int hits = 0, total = 0;
        for (int k = 1; k <= n / 2; ++k) {
            const CommunityCensus c = community_census(lpa_detect(build_network(n, k)));
            ++total;
            if (c.n_c == k) ++hits;
        }
        CHECK(hits == total);  // exact at these sizes
    }
}

TEST_CASE("half filling gives pairs") {
    const CommunityCensus c = community_census(lpa_detect(build_network(20, 10)));
    CHECK(c.n_c == 10);
    for (int sz : c.sizes) CHECK(sz == 2);
}

TEST_CASE("schedule validity: color classes are independent sets") {
    const WeightedNetwork net = build_network(36, 11);
    const AdjacencyMatrix adj = adjacency(net);
    const Coloring col = greedy_coloring(adj);
    for (int c = 0; c < col.num_colors; ++c)
        for (int u = 0; u < net.n; ++u)
            for (int v = u + 1; v < net.n; ++v)
                if (col.color[static_cast<std::size_t>(u)] == c &&
                    col.color[static_cast<std::size_t>(v)] == c)
                    CHECK(!adj(u, v));
}

TEST_CASE("partition property") {
    const WeightedNetwork net = build_network(30, 7);
    const Labeling lab = lpa_detect(net);
    CHECK(lab.label.size() == 30);
    const CommunityCensus c = community_census(lab);
    int covered = 0;
    for (int sz : c.sizes) covered += sz;
    CHECK(covered == 30 - static_cast<int>(lab.isolated.size()));
}

TEST_CASE("isolated nodes") {
    const auto net = manual_network(5, {{1, 2, 1}, {2, 3, 1}});
    SUBCASE("excluded by default") {
        const Labeling lab = lpa_detect(net);
        CHECK(lab.isolated == std::vector<int>{4, 5});
        const CommunityCensus c = community_census(lab);
        CHECK(c.n_c == 1);
        CHECK(c.isolated_nodes == 2);
    }
    SUBCASE("included behind the flag") {
        LpaOptions opt;
        opt.include_isolated = true;
        const CommunityCensus c = community_census(lpa_detect(net, opt));
        CHECK(c.n_c == 3);  // one triple plus two singletons
        CHECK(c.size_histogram.at(1) == 2);
    }
}
