#include "doctest.h"

#include "tetracode/bosonic.hpp"

using namespace tetracode;

TEST_CASE("steane code structure") {
    BosonicCode c = steane_code();
    CHECK(c.n == 7);
    CHECK(c.k == 1);
    CHECK(c.d_b == 3);
    CHECK(c.n_stabilizers() == 6);
    CHECK_NOTHROW(c.validate());
    // the stated logical triple
    CHECK(c.logicals[0].str() == "X1 X3 X5");
    CHECK(c.logicals[1].str() == "Y1 Y2 Y7");
    CHECK(c.logicals[2].str() == "Z5 Z6 Z7");
    CHECK(!pauli_strings_commute(c.logicals[0], c.logicals[2]));  // overlap on qubit 5
}

TEST_CASE("steane distance by exhaustion") {
    CHECK(bosonic_distance_brute_force(steane_code(), 3) == 3);
}

TEST_CASE("color code family") {
    BosonicCode c3 = color_code(3);
    CHECK(c3.family == "color");
    CHECK(c3.n == 7);
    CHECK(c3.n_stabilizers() == 6);

    BosonicCode c5 = color_code(5);
    CHECK(c5.n == 19);
    CHECK(c5.n_stabilizers() == 18);  // 9 X + 9 Z
    CHECK_NOTHROW(c5.validate());

    BosonicCode c7 = color_code(7);
    CHECK(c7.n == 37);
    CHECK(c7.n_stabilizers() == 36);  // 18 X + 18 Z
    CHECK_NOTHROW(c7.validate());

    CHECK_THROWS_AS(color_code(4), std::invalid_argument);
    CHECK_THROWS_AS(color_code(1), std::invalid_argument);
}

TEST_CASE("color code distances") {
    CHECK(bosonic_distance_brute_force(color_code(3), 3) == 3);
    // d = 5: no logical through weight 4, and the weight-5 boundary line is
    // a valid logical, so the distance is exactly 5
    BosonicCode c5 = color_code(5);
    CHECK(bosonic_distance_brute_force(c5, 4) == 0);
    CHECK(c5.logicals[0].terms.size() == 5);
}

TEST_CASE("rotated surface code family") {
    BosonicCode s3 = rotated_surface_code(3);
    CHECK(s3.n == 9);
    CHECK(s3.n_stabilizers() == 8);
    CHECK_NOTHROW(s3.validate());
    int x3 = 0;
    for (const auto& g : s3.generators)
        if (g.terms.front().pauli == Pauli::X) ++x3;
    CHECK(x3 == 4);

    BosonicCode s5 = rotated_surface_code(5);
    CHECK(s5.n == 25);
    CHECK(s5.n_stabilizers() == 24);
    int x5 = 0;
    for (const auto& g : s5.generators)
        if (g.terms.front().pauli == Pauli::X) ++x5;
    CHECK(x5 == 12);  // 12 X and 12 Z stabilizers
    CHECK_NOTHROW(s5.validate());
}

TEST_CASE("surface code distances") {
    CHECK(bosonic_distance_brute_force(rotated_surface_code(3), 3) == 3);
    BosonicCode s5 = rotated_surface_code(5);
    CHECK(bosonic_distance_brute_force(s5, 4) == 0);
    CHECK(s5.logicals[0].terms.size() == 5);
}

TEST_CASE("family lookup") {
    CHECK(bosonic_code_by_family("steane", 3).family == "steane");
    CHECK(bosonic_code_by_family("color", 5).n == 19);
    CHECK(bosonic_code_by_family("surface", 3).n == 9);
    CHECK_THROWS_AS(bosonic_code_by_family("toric", 3), std::invalid_argument);
    CHECK_THROWS_AS(bosonic_code_by_family("steane", 5), std::invalid_argument);
}
