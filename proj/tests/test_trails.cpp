#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "emh/trails.hpp"
#include "helpers.hpp"

using emh::ExtInt;
using emh::Graph;

namespace {

const std::vector<std::vector<int>> kExpected22 = {
    {0, 1, 2}, {0, 2, 1}, {0, 2, 3}, {0, 2, 4}, {1, 0, 2}, {1, 2, 0}, {1, 2, 3},
    {1, 2, 4}, {2, 0, 1}, {2, 1, 0}, {2, 3, 4}, {2, 4, 3}, {3, 2, 0}, {3, 2, 1},
    {3, 2, 4}, {3, 4, 2}, {4, 2, 0}, {4, 2, 1}, {4, 2, 3}, {4, 3, 2}};

const std::vector<std::vector<int>> kExpected12 = {
    {0, 3}, {0, 4}, {1, 3}, {1, 4}, {3, 0}, {3, 1}, {4, 0}, {4, 1}};

}  // namespace

TEST_CASE("worked-example trail bases in grading 2") {
    Graph g = emh_test::figure1_graph();
    auto dm = emh::path_metric(g);
    CHECK(emh::enumerate_trails(g, dm, 2, 2) == kExpected22);
    CHECK(emh::enumerate_trails(g, dm, 1, 2) == kExpected12);
    CHECK(emh::enumerate_trails(g, dm, 3, 2).empty());
}

TEST_CASE("degree above the grading is always empty") {
    std::uint64_t seed = 31;
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = emh_test::random_graph(6, 0.4, seed++);
        auto dm = emh::path_metric(g);
        for (int ell = 0; ell <= 3; ++ell)
            for (int k = ell + 1; k <= ell + 2; ++k)
                CHECK(emh::enumerate_trails(g, dm, k, ell).empty());
    }
}

TEST_CASE("enumeration matches the brute-force tuple filter") {
    std::uint64_t seed = 97;
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 4 + static_cast<int>(rep % 3);
        Graph g = emh_test::random_graph(n, 0.45, seed++);
        auto dm = emh::path_metric(g);
        for (int k = 0; k <= 4; ++k)
            for (int ell = 0; ell <= 5; ++ell) {
                CHECK(emh::enumerate_trails(g, dm, k, ell) ==
                      emh_test::bruteforce_trails(g, dm, k, ell));
                CHECK(emh::enumerate_trails(g, dm, k, ell, std::make_pair(0, n - 1)) ==
                      emh_test::bruteforce_trails(g, dm, k, ell, std::make_pair(0, n - 1)));
            }
    }
}

TEST_CASE("boundary columns of the worked example") {
    Graph g = emh_test::figure1_graph();
    auto dm = emh::path_metric(g);
    auto basis2 = emh::make_basis(g, dm, 2, 2);
    auto basis1 = emh::make_basis(g, dm, 1, 2);
    emh::IntegerMatrix b = emh::boundary_matrix(basis2, basis1, dm);
    REQUIRE(b.rows() == 8);
    REQUIRE(b.cols() == 20);

    // (0,1,2): dropping the middle landmark gives (0,2) of length 1, so the
    // whole column vanishes.
    int col_012 = basis2.index_of({0, 1, 2});
    REQUIRE(col_012 >= 0);
    for (int r = 0; r < 8; ++r) CHECK(b.get(r, col_012) == 0);

    // (0,2,3): the only face that keeps length 2 is (0,3), with sign -1.
    int col_023 = basis2.index_of({0, 2, 3});
    int row_03 = basis1.index_of({0, 3});
    REQUIRE(col_023 >= 0);
    REQUIRE(row_03 >= 0);
    CHECK(b.get(row_03, col_023) == -1);
    for (int r = 0; r < 8; ++r)
        if (r != row_03) CHECK(b.get(r, col_023) == 0);
}

TEST_CASE("degree-1 boundary has no interior landmarks to drop") {
    Graph g = emh_test::figure1_graph();
    auto c = emh::build_emc(g, 2);
    CHECK(c.boundary(1).rows() == 0);
    CHECK(c.boundary(1).is_zero());
}

TEST_CASE("boundary composites vanish on random graphs") {
    std::uint64_t seed = 1234;
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = emh_test::random_graph(6, 0.4, seed++);
        for (int ell = 0; ell <= 4; ++ell) {
            auto c = emh::build_emc(g, ell);
            CHECK(c.first_nonzero_composite() == -1);
        }
    }
}

TEST_CASE("worked-example chain complex sizes") {
    auto c = emh::build_emc(emh_test::figure1_graph(), 2);
    REQUIRE(c.gradings == std::vector<int>{0, 8, 20});
}

TEST_CASE("endpoint summands partition the full basis") {
    std::uint64_t seed = 555;
    for (int rep = 0; rep < 6; ++rep) {
        Graph g = emh_test::random_graph(5, 0.5, seed++);
        auto dm = emh::path_metric(g);
        for (int ell = 0; ell <= 3; ++ell) {
            auto full = emh::build_emc(g, ell);
            for (int k = 0; k <= ell; ++k) {
                std::vector<std::vector<int>> merged;
                for (int a = 0; a < 5; ++a)
                    for (int b = 0; b < 5; ++b) {
                        auto part = emh::enumerate_trails(g, dm, k, ell, std::make_pair(a, b));
                        merged.insert(merged.end(), part.begin(), part.end());
                    }
                std::sort(merged.begin(), merged.end());
                CHECK(static_cast<int>(merged.size()) == full.basis_size(k));
                CHECK(merged == emh::enumerate_trails(g, dm, k, ell));
            }
        }
    }
}

TEST_CASE("zero grading has one generator per vertex") {
    Graph g = emh_test::figure1_graph();
    auto c = emh::build_emc(g, 0);
    REQUIRE(c.gradings == std::vector<int>{5});
    auto restricted = emh::build_emc(g, 0, std::make_pair(2, 2));
    REQUIRE(restricted.gradings == std::vector<int>{1});
    auto off_diagonal = emh::build_emc(g, 0, std::make_pair(0, 2));
    REQUIRE(off_diagonal.gradings == std::vector<int>{0});
}

TEST_CASE("edgeless graph has empty positive gradings") {
    Graph g = Graph::from_edge_list(3, {});
    auto c = emh::build_emc(g, 1);
    REQUIRE(c.gradings == std::vector<int>{0, 0});
}
