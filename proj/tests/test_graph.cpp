#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "emh/graph.hpp"
#include "helpers.hpp"

using emh::ExtInt;
using emh::Graph;

TEST_CASE("from_edge_list builds the worked-example graph") {
    Graph g = emh_test::figure1_graph();
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(g.edges().size() == 6);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(2, 4));
    REQUIRE_FALSE(g.has_edge(0, 3));
}

TEST_CASE("from_edge_list normalizes and deduplicates") {
    Graph g = Graph::from_edge_list(3, {{1, 0}, {0, 1}, {2, 1}});
    REQUIRE(g.edges().size() == 2);
    REQUIRE(g.edges()[0] == std::make_pair(0, 1));
    REQUIRE(g.edges()[1] == std::make_pair(1, 2));
}

TEST_CASE("from_edge_list rejects bad input") {
    REQUIRE_THROWS_WITH(Graph::from_edge_list(2, {{0, 0}}),
                        Catch::Matchers::ContainsSubstring("self-loop"));
    REQUIRE_THROWS_WITH(Graph::from_edge_list(2, {{0, 5}}),
                        Catch::Matchers::ContainsSubstring("(0,5)"));
    Graph empty = Graph::from_edge_list(3, {});
    REQUIRE(empty.edges().empty());
}

TEST_CASE("path metric on the worked example") {
    auto dm = emh::path_metric(emh_test::figure1_graph());
    CHECK(dm(0, 3) == ExtInt(2));
    CHECK(dm(0, 4) == ExtInt(2));
    CHECK(dm(1, 4) == ExtInt(2));
    CHECK(dm(0, 2) == ExtInt(1));
    for (int v = 0; v < 5; ++v) CHECK(dm(v, v) == ExtInt(0));
}

TEST_CASE("disconnected pairs are at infinite distance") {
    Graph g = Graph::from_edge_list(2, {});
    auto dm = emh::path_metric(g);
    REQUIRE_FALSE(dm(0, 1).is_finite());
    REQUIRE(dm(0, 0) == ExtInt(0));
}

TEST_CASE("path metric matches exhaustive path enumeration on all graphs with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        const int m = static_cast<int>(all_pairs.size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) edges.push_back(all_pairs[i]);
            Graph g = Graph::from_edge_list(n, edges);
            auto dm = emh::path_metric(g);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    auto expect = emh_test::bruteforce_distance(g, u, v);
                    if (expect)
                        REQUIRE(dm(u, v) == ExtInt(*expect));
                    else
                        REQUIRE_FALSE(dm(u, v).is_finite());
                }
        }
    }
}

TEST_CASE("distance matrix satisfies metric axioms on random graphs") {
    std::uint64_t seed = 11;
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = emh_test::random_graph(8, 0.3, seed++);
        auto dm = emh::path_metric(g);
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) {
                CHECK(dm(u, v) == dm(v, u));
                CHECK((dm(u, v) == ExtInt(1)) == g.has_edge(u, v));
                for (int w = 0; w < 8; ++w)
                    if (dm(u, w).is_finite() && dm(w, v).is_finite())
                        CHECK(dm(u, v) <= dm(u, w) + dm(w, v));
            }
    }
}

TEST_CASE("sample_er with alpha 0 is complete") {
    Graph g = emh::sample_er({6, 0.0, 123});
    REQUIRE(g.edges().size() == 15);
}

TEST_CASE("sample_er is reproducible for a fixed seed") {
    Graph a = emh::sample_er({20, 0.5, 7});
    Graph b = emh::sample_er({20, 0.5, 7});
    REQUIRE(a.edges() == b.edges());
    Graph c = emh::sample_er({20, 0.5, 8});
    REQUIRE(a.edges() != c.edges());
}

TEST_CASE("sample_er edge density concentrates at n^-alpha") {
    // n = 1000, alpha = 0.3, 50 trials: the mean density over all draws
    // must sit within 3 standard errors of the target probability.
    const int n = 1000;
    const double alpha = 0.3;
    const double p = std::pow(n, -alpha);
    const double possible = n * (n - 1) / 2.0;
    double edges = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t)
        edges += static_cast<double>(emh::sample_er({n, alpha, 1000ull + t}).edges().size());
    const double density = edges / (possible * trials);
    const double se = std::sqrt(p * (1 - p) / (possible * trials));
    REQUIRE(std::abs(density - p) < 3 * se);
}

TEST_CASE("sample_er means converge across distinct seeds") {
    const int n = 500;
    const double alpha = 0.5;
    const double p = std::pow(n, -alpha);
    const double possible = n * (n - 1) / 2.0;
    double edges = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t)
        edges += static_cast<double>(emh::sample_er({n, alpha, 777000ull + t}).edges().size());
    const double density = edges / (possible * trials);
    const double se = std::sqrt(p * (1 - p) / (possible * trials));
    REQUIRE(std::abs(density - p) < 4 * se);
}

TEST_CASE("edge-list text round trip with comments") {
    std::istringstream in("# toy graph\n5\n0 1\n1 2  # inline note\n\n2 3\n");
    Graph g = emh::parse_edge_list(in);
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(g.edges().size() == 3);
    std::ostringstream out;
    emh::write_edge_list(out, g);
    std::istringstream in2(out.str());
    Graph g2 = emh::parse_edge_list(in2);
    REQUIRE(g.edges() == g2.edges());
}
