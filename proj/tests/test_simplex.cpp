#include <doctest.h>

#include "hexalab/cochain.hpp"
#include "hexalab/simplex.hpp"

using namespace hexalab;

TEST_CASE("simplex invariants and faces") {
    CHECK_THROWS_AS(Simplex({2, 1}), HexalabError);
    CHECK_THROWS_AS(Simplex({1, 1}), HexalabError);

    auto tets = faces(Simplex{1, 2, 3, 4, 5}, 3);
    REQUIRE(tets.size() == 5);
    CHECK(tets[0] == Simplex{1, 2, 3, 4});
    CHECK(tets[1] == Simplex{1, 2, 3, 5});
    CHECK(tets[2] == Simplex{1, 2, 4, 5});
    CHECK(tets[3] == Simplex{1, 3, 4, 5});
    CHECK(tets[4] == Simplex{2, 3, 4, 5});

    CHECK(faces(delta5(), 4).size() == 6);
    CHECK(faces(Simplex{1, 2}, 1) == std::vector<Simplex>{Simplex{1, 2}});
}

TEST_CASE("orientation signs") {
    Simplex u{1, 2, 3, 4, 5};
    CHECK(orientation_sign(Simplex{1, 2, 3, 4}, u) == 1);  // omits position 4
    CHECK(orientation_sign(Simplex{1, 2, 3, 5}, u) == -1); // omits position 3
    CHECK(orientation_sign(Simplex{2, 3, 4, 5}, u) == 1);  // omits position 0
    CHECK_THROWS_AS(orientation_sign(Simplex{1, 2, 3, 6}, u), HexalabError);
}

TEST_CASE("cluster classification") {
    SUBCASE("two pentachora") {
        auto c = Cluster::build({Simplex{1, 2, 3, 4, 5}, Simplex{1, 2, 3, 4, 6}});
        CHECK(c.boundary_tetrahedra().size() == 8);
        auto inner = c.inner_tetrahedra();
        REQUIRE(inner.size() == 1);
        CHECK(inner[0] == Simplex{1, 2, 3, 4});
        CHECK(c.edges.size() == 14);
        CHECK(c.vertices.size() == 6);
        CHECK(c.boundary_edges().size() == 14); // all edges boundary
    }
    SUBCASE("three pentachora") {
        auto c = Cluster::build({Simplex{1, 2, 3, 4, 5}, Simplex{1, 2, 3, 4, 6}, Simplex{1, 2, 3, 5, 6}});
        CHECK(c.boundary_tetrahedra().size() == 9);
        CHECK(c.inner_tetrahedra().size() == 3);
        CHECK(c.edges.size() == 15);
    }
    SUBCASE("single pentachoron") {
        auto c = Cluster::build({Simplex{1, 2, 3, 4, 5}});
        CHECK(c.boundary_tetrahedra().size() == 5);
        CHECK(c.inner_tetrahedra().empty());
    }
    SUBCASE("omitted-vertex constructor validates") {
        CHECK_THROWS_AS(cluster_from_omitted({}), HexalabError);
        CHECK_THROWS_AS(cluster_from_omitted({1, 2, 3, 4, 5, 6}), HexalabError);
        auto c = cluster_from_omitted({6, 5});
        CHECK(c.pentachora == std::vector<Simplex>{Simplex{1, 2, 3, 4, 5}, Simplex{1, 2, 3, 4, 6}});
    }
    SUBCASE("a tetrahedron in three pentachora is rejected") {
        CHECK_THROWS_AS(
            Cluster::build({Simplex{1, 2, 3, 4, 5}, Simplex{1, 2, 3, 4, 6}, Simplex{1, 2, 3, 4, 7}}),
            HexalabError);
    }
}

TEST_CASE("complementary clusters share the boundary, tetrahedra pair up") {
    int total_incidences = 0;
    for (unsigned mask = 1; mask < 63; ++mask) {
        std::set<Vertex> omitted, complement;
        for (Vertex v = 1; v <= 6; ++v)
            ((mask >> (v - 1)) & 1 ? omitted : complement).insert(v);
        if (omitted.size() > complement.size()) continue;
        if (omitted.size() == complement.size() && omitted > complement) continue;
        auto c = cluster_from_omitted(omitted);
        auto cb = cluster_from_omitted(complement);
        CHECK(c.boundary_tetrahedra() == cb.boundary_tetrahedra());
    }
    for (const auto& u : delta5_pentachora()) total_incidences += static_cast<int>(faces(u, 3).size());
    CHECK(total_incidences == 30); // 6 * 5 = 2 * 15
    // every tetrahedron of the boundary lies in exactly two pentachora
    auto all = Cluster::build(delta5_pentachora());
    CHECK(all.tetrahedra.size() == 15);
    for (bool inner : all.tet_inner) CHECK(inner);
}

TEST_CASE("delta1 and the cocycle identity") {
    PrimeField f(2147483647);
    std::vector<Vertex> verts{1, 2, 3, 4, 5, 6};

    auto zero = Cochain1<PrimeField>::zero(f, verts);
    auto w0 = delta1(f, zero);
    for (const auto& v : w0.vals) CHECK(f.is_zero(v));
    CHECK(cocycle_check(f, w0));

    auto ones = Cochain1<PrimeField>::zero(f, verts);
    for (auto& v : ones.vals) v = f.one();
    auto w1 = delta1(f, ones);
    for (const auto& v : w1.vals) CHECK(f.eq(v, f.one())); // 1 - 1 + 1
    CHECK(cocycle_check(f, w1));

    Rng rng(42);
    auto b = Cochain1<PrimeField>::sample(f, verts, rng);
    auto w = delta1(f, b);
    CHECK(cocycle_check(f, w));

    // perturbing a single triangle breaks exactly the incident sums
    auto wbad = w;
    wbad.vals[0] = f.add(wbad.vals[0], f.one());
    CHECK_FALSE(cocycle_check(f, wbad));
}
