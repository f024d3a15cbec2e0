#include <catch2/catch_amalgamated.hpp>

#include "emh/homology.hpp"
#include "helpers.hpp"

using emh::TupleComplex;

namespace {

// All injective words over {0,1,2}: a wedge of two 2-spheres up to
// homotopy. Its 1-skeleton is a connected graph on 3 vertices with 6
// directed edges.
TupleComplex full_words3() {
    return TupleComplex::closure_of({{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
}

TupleComplex words3_skeleton() {
    return TupleComplex::closure_of({{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
}

}  // namespace

TEST_CASE("closure and facet bookkeeping") {
    auto x = TupleComplex::closure_of({{0, 1, 2}});
    CHECK(x.face_count() == 7);  // 1 word of 3 letters, 3 of 2, 3 of 1
    CHECK(x.dim() == 2);
    CHECK(x.contains({0, 2}));
    CHECK_FALSE(x.contains({2, 0}));
    CHECK(x.facets() == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK_FALSE(x.closure_violation().has_value());

    CHECK_THROWS_AS(TupleComplex::from_faces({{0, 1}, {0}}), std::invalid_argument);
    CHECK_NOTHROW(TupleComplex::from_faces({{0, 1}, {0}, {1}}));
    CHECK_THROWS_AS(TupleComplex::closure_of({{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("subword predicate") {
    CHECK(emh::is_subword({0, 2}, {0, 1, 2}));
    CHECK(emh::is_subword({}, {0, 1}));
    CHECK_FALSE(emh::is_subword({2, 0}, {0, 1, 2}));
    CHECK_FALSE(emh::is_subword({0, 1, 2}, {0, 2}));
}

TEST_CASE("reduced homology of small word complexes") {
    TupleComplex point = TupleComplex::closure_of({{0}});
    CHECK(emh::reduced_homology(point, 0).trivial());

    TupleComplex two_points = TupleComplex::closure_of({{0}, {1}});
    auto h0 = emh::reduced_homology(two_points, 0);
    CHECK(h0.free_rank == 1);
    CHECK(h0.torsion.empty());

    // Connected graph with 3 vertices and 6 edges: reduced H_1 has rank
    // E - V + 1 = 4 and reduced H_0 vanishes.
    TupleComplex skel = words3_skeleton();
    auto c0 = emh::reduced_homology(skel, 0);
    auto c1 = emh::reduced_homology(skel, 1);
    CHECK(c0.free_rank == 0);
    CHECK(c1.torsion.empty());
    CHECK(c1.free_rank == 4);

    // Full word complex on 3 letters: reduced homology is concentrated in
    // the top degree, free of rank 2 (= derangements of 3 letters).
    TupleComplex full = full_words3();
    CHECK(emh::reduced_homology(full, 0).trivial());
    CHECK(emh::reduced_homology(full, 1).trivial());
    auto top = emh::reduced_homology(full, 2);
    CHECK(top.free_rank == 2);
    CHECK(top.torsion.empty());

    TupleComplex empty;
    CHECK(emh::reduced_homology(empty, 0).trivial());
}

TEST_CASE("relative homology of a pair") {
    auto full = full_words3();
    auto skel = words3_skeleton();
    REQUIRE(full.contains_subcomplex(skel));

    // H_*(X, X) = 0.
    for (int d = 0; d <= full.dim(); ++d)
        CHECK(emh::relative_homology(full, full, d).trivial());

    // Only the six top faces survive in the quotient, and their boundaries
    // land entirely in the subcomplex, so the relative homology is Z^6 in
    // degree 2 and zero below.
    auto rel = emh::relative_homology(full, skel, 2);
    CHECK(rel.free_rank == 6);
    CHECK(rel.torsion.empty());
    CHECK(emh::relative_homology(full, skel, 1).trivial());
    CHECK(emh::relative_homology(full, skel, 0).trivial());

    // Out-of-range degrees are reported as trivial, not as errors.
    CHECK(emh::relative_homology(full, skel, 7).trivial());
    CHECK(emh::relative_homology(full, skel, -1).trivial());
}

TEST_CASE("containment violations carry a witness") {
    auto big = TupleComplex::closure_of({{0, 1}});
    auto sub = TupleComplex::closure_of({{2}});
    std::vector<int> witness;
    CHECK_FALSE(big.contains_subcomplex(sub, &witness));
    CHECK(witness == std::vector<int>{2});
    CHECK_THROWS_WITH(emh::relative_chain_complex(big, sub),
                      Catch::Matchers::ContainsSubstring("(2)"));
}

TEST_CASE("relative chain complex drops subcomplex faces degree by degree") {
    auto big = TupleComplex::closure_of({{0, 1, 2}});
    auto sub = TupleComplex::closure_of({{0, 1}, {1, 2}, {0, 2}});
    auto c = emh::relative_chain_complex(big, sub);
    REQUIRE(c.gradings == std::vector<int>{0, 0, 1});
    CHECK(c.boundary(2).is_zero());
    CHECK(c.first_nonzero_composite() == -1);
    auto h = emh::relative_homology(big, sub, 2);
    CHECK(h.free_rank == 1);
    CHECK(h.torsion.empty());
}
