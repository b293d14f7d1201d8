#include <doctest.h>
#include <stdexcept>

#include "catalog/triangulations.hpp"

using namespace tqft;

TEST_CASE("boundary of the 4-simplex") {
    Triangulation t = boundary_of_4_simplex();
    CHECK(t.n_tets == 5);
    CHECK(t.n_vertices == 5);
    CHECK(t.n_edges == 10);
    CHECK(t.n_faces == 10);
    CHECK(homology_b1(t, 2) == 0);
    CHECK(homology_b1(t, 3) == 0);
}

TEST_CASE("two tet sphere") {
    Triangulation t = two_tet_sphere();
    CHECK(t.n_vertices == 4);
    CHECK(t.n_edges == 6);
    CHECK(homology_b1(t, 2) == 0);
}

TEST_CASE("S2 x S1") {
    Triangulation t = s2_x_s1();
    CHECK(t.n_tets == 6);
    CHECK(homology_b1(t, 2) == 1);
    CHECK(homology_b1(t, 3) == 1);
}

TEST_CASE("lens spaces") {
    Triangulation rp3 = lens_space(2, 1);
    CHECK(homology_b1(rp3, 2) == 1);  // H_1 = Z/2
    CHECK(homology_b1(rp3, 3) == 0);
    Triangulation l31 = lens_space(3, 1);
    CHECK(homology_b1(l31, 3) == 1);  // H_1 = Z/3
    CHECK(homology_b1(l31, 2) == 0);
}

TEST_CASE("triangulation JSON round trip") {
    Triangulation t = boundary_of_4_simplex();
    Triangulation back = load_triangulation_json(triangulation_to_json(t));
    CHECK(back.n_tets == 5);
    CHECK(back.n_edges == 10);
}

TEST_CASE("loader rejects broken gluing tables") {
    // one tetrahedron with unglued faces
    CHECK_THROWS_WITH_AS(
        load_triangulation_json(
            R"({"format":"tri3/1","tetrahedra":1,"orient":[1],"gluings":[]})"),
        doctest::Contains("unglued"), std::runtime_error);
    // two tets glued with orientation-violating permutations
    CHECK_THROWS_WITH_AS(
        load_triangulation_json(
            R"({"format":"tri3/1","tetrahedra":2,"orient":[1,1],
                "gluings":[[0,0,1,0,[0,1,2,3]],[0,1,1,1,[0,1,2,3]],
                           [0,2,1,2,[0,1,2,3]],[0,3,1,3,[0,1,2,3]]]})"),
        doctest::Contains("orientation"), std::runtime_error);
}
