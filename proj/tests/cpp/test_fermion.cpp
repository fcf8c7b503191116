#include "doctest.h"

#include "tetracode/factory.hpp"
#include "tetracode/fermion.hpp"

using namespace tetracode;

TEST_CASE("b_to_f on the 7-qubit code") {
    FermionCode fc = b_to_f(steane_code());
    CHECK(fc.n_generators() == 13);
    CHECK(fc.params_str() == "[[14,1,6f]]");
    CHECK(fc.stabilizer_basis().rank() == 13);

    // generators commute pairwise and have even weight
    for (int i = 0; i < fc.n_generators(); ++i) {
        CHECK(fc.generators[std::size_t(i)].op.even_weight());
        for (int j = i + 1; j < fc.n_generators(); ++j)
            CHECK(commutes(fc.generators[std::size_t(i)].op, fc.generators[std::size_t(j)].op));
    }

    // every tetron operator lies in the stabilizer group
    for (int q = 1; q <= 7; ++q) CHECK(fc.in_stabilizer_group(tetron_op(q, fc.layout)));

    // set-i times its matching set-0 generator is the tetron operator
    for (const auto& g : fc.generators) {
        if (g.set == 0) continue;
        const auto& base0 = fc.generators[std::size_t(g.base_index)];
        CHECK(base0.set == 0);
        CHECK(base0.base_index == g.base_index);
        CHECK(multiply(g.op, base0.op) == tetron_op(g.set, fc.layout));
    }
}

TEST_CASE("claim 1: single-MZM errors are visible") {
    for (const char* family : {"steane", "surface"}) {
        FermionCode fc = b_to_f(bosonic_code_by_family(family, 3));
        for (int b = 0; b < fc.n_maj(); ++b) {
            MajoranaOp e(fc.n_maj());
            e.flip(b);
            BitVec s = fc.syndrome(e);
            CHECK(s.any());
        }
    }
}

TEST_CASE("gamma_a splits the set-i / set-0 pair") {
    FermionCode fc = b_to_f(steane_code());
    for (int q = 1; q <= 7; ++q) {
        MajoranaOp e(fc.n_maj());
        e.flip(fc.layout.mzm_index(q, Mzm::A));
        BitVec s = fc.syndrome(e);
        for (int g = 0; g < fc.n_generators(); ++g) {
            const auto& gen = fc.generators[std::size_t(g)];
            if (gen.set != q) continue;
            // the pair covering tetron q reports opposite parities when the
            // base generator touches the tetron
            int match = -1;
            for (int h = 0; h < fc.n_generators(); ++h)
                if (fc.generators[std::size_t(h)].set == 0 &&
                    fc.generators[std::size_t(h)].base_index == gen.base_index)
                    match = h;
            REQUIRE(match >= 0);
            CHECK(s.get(static_cast<std::size_t>(g)) != s.get(static_cast<std::size_t>(match)));
        }
    }
}

TEST_CASE("logicals survive the construction") {
    FermionCode fc = b_to_f(steane_code());
    REQUIRE(fc.logicals.size() == 3);
    for (const auto& l : fc.logicals) {
        CHECK(l.weight() == 6);
        for (const auto& g : fc.generators) CHECK(commutes(l, g.op));
        CHECK(!fc.in_stabilizer_group(l));
    }
    CHECK(!commutes(fc.logicals[0], fc.logicals[2]));
    CHECK(fc.in_stabilizer_group(MajoranaOp(fc.n_maj())));  // identity
}

TEST_CASE("distance by exhaustion: d_f = 6 for distance-3 bases") {
    FermionCode color = b_to_f(steane_code());
    DistanceResult dr = min_logical_weight(color, 6);
    CHECK(dr.found);
    CHECK(dr.value == 6);

    FermionCode surf = b_to_f(rotated_surface_code(3));
    CHECK(surf.params_str() == "[[18,1,6f]]");
    DistanceResult ds = min_logical_weight(surf, 6);
    CHECK(ds.found);
    CHECK(ds.value == 6);

    CHECK(!min_logical_weight(color, 0).found);
    CHECK_THROWS_AS(min_logical_weight(color, 6, 10), std::runtime_error);
}

TEST_CASE("construction table ranks") {
    CHECK(b_to_f(color_code(5)).n_generators() == 37);
    CHECK(b_to_f(color_code(5)).stabilizer_basis().rank() == 37);
    CHECK(b_to_f(color_code(7)).n_generators() == 73);
    CHECK(b_to_f(color_code(7)).stabilizer_basis().rank() == 73);
    CHECK(b_to_f(rotated_surface_code(5)).n_generators() == 49);
    CHECK(b_to_f(rotated_surface_code(5)).stabilizer_basis().rank() == 49);
}

TEST_CASE("rank helper ignores duplicates") {
    FermionCode fc = b_to_f(steane_code());
    std::vector<MajoranaOp> ops;
    for (const auto& g : fc.generators) ops.push_back(g.op);
    CHECK(f2_rank_of(ops) == 13);
    ops.push_back(ops.front());
    CHECK(f2_rank_of(ops) == 13);
}

TEST_CASE("bad picks are rejected") {
    BosonicCode base = steane_code();
    std::vector<int> pick = default_pick(base);
    // find a generator that does not cover qubit 4 (every one covers qubit 1)
    int bad = -1;
    for (std::size_t g = 0; g < base.generators.size(); ++g) {
        bool covers = false;
        for (const auto& t : base.generators[g].terms)
            if (t.qubit == 4) covers = true;
        if (!covers) { bad = int(g); break; }
    }
    REQUIRE(bad >= 0);
    pick[3] = bad;
    CHECK_THROWS_AS(b_to_f(base, pick), std::invalid_argument);
    pick.pop_back();
    CHECK_THROWS_AS(b_to_f(base, pick), std::invalid_argument);
}

TEST_CASE("bosonic alias of fermionic errors") {
    TetronLayout layout(7);
    FermionCode fc = b_to_f(steane_code());
    MajoranaOp alias_a = bosonic_fermionic_alias(1, Mzm::A, layout);
    CHECK(alias_a == pauli_to_majorana({1, Pauli::X, Rep::RPrime}, layout));
    CHECK(bosonic_fermionic_alias(3, Mzm::D, layout).identity());

    // gamma_x and gamma_x gamma_d give the same set-0 syndromes
    for (int q = 1; q <= 7; ++q)
        for (Mzm x : {Mzm::A, Mzm::B, Mzm::C}) {
            MajoranaOp e(fc.n_maj());
            e.flip(layout.mzm_index(q, x));
            MajoranaOp alias = bosonic_fermionic_alias(q, x, layout);
            for (const auto& g : fc.generators) {
                if (g.set != 0) continue;
                CHECK(commutes(e, g.op) == commutes(alias, g.op));
            }
        }
}

TEST_CASE("gamma_d is set-0 invisible but set-i visible") {
    FermionCode fc = b_to_f(steane_code());
    for (int q = 1; q <= 7; ++q) {
        MajoranaOp e(fc.n_maj());
        e.flip(fc.layout.mzm_index(q, Mzm::D));
        bool set0_hit = false, seti_hit = false;
        for (const auto& g : fc.generators) {
            if (commutes(e, g.op)) continue;
            (g.set == 0 ? set0_hit : seti_hit) = true;
        }
        CHECK(!set0_hit);
        CHECK(seti_hit);
    }
}

TEST_CASE("factory builds by family") {
    FermionCode fc = build_fermion_code("color", 3, PickPolicy::Default);
    CHECK(fc.params_str() == "[[14,1,6f]]");
    CHECK(build_fermion_code("surface", 5).params_str() == "[[50,1,10f]]");
    CHECK_THROWS_AS(build_fermion_code("bad", 3), std::invalid_argument);
}
