#include "doctest.h"

#include "tetracode/bitvec.hpp"
#include "tetracode/noise.hpp"

using namespace tetracode;

TEST_CASE("bitvec basics") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK(!v.any());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.weight() == 3);
    CHECK(v.get(64));
    CHECK(v.top_bit() == 129);
    v.flip(129);
    CHECK(v.top_bit() == 64);

    BitVec w(130);
    w.set(64);
    CHECK(v.overlap(w) == 1);
    CHECK(v.overlap_parity(w));
    v ^= w;
    CHECK(v.weight() == 1);
    CHECK(v.ones() == std::vector<std::size_t>{0});
}

TEST_CASE("xor is an involution on random vectors") {
    RngStream rng(7, 0);
    for (int rep = 0; rep < 50; ++rep) {
        BitVec a(97), b(97);
        for (std::size_t i = 0; i < 97; ++i) {
            if (rng.bernoulli(0.4)) a.set(i);
            if (rng.bernoulli(0.4)) b.set(i);
        }
        BitVec c = a ^ b;
        CHECK((c ^ b) == a);
        CHECK((a ^ a).any() == false);
        CHECK((a.weight() + b.weight()) % 2 == (c.weight() % 2));
    }
}

TEST_CASE("f2 basis rank and membership") {
    auto vec = [](std::initializer_list<int> bits) {
        BitVec v(8);
        for (int b : bits) v.set(static_cast<std::size_t>(b));
        return v;
    };
    F2Basis basis;
    CHECK(basis.add(vec({0, 1})));
    CHECK(basis.add(vec({1, 2})));
    CHECK(!basis.add(vec({0, 2})));  // dependent
    CHECK(basis.rank() == 2);
    CHECK(basis.contains(vec({0, 2})));
    CHECK(basis.contains(vec({})));
    CHECK(!basis.contains(vec({0})));

    std::vector<BitVec> rows = {vec({0, 1}), vec({1, 2}), vec({0, 2}), vec({3})};
    CHECK(f2_rank(rows) == 3);
    rows.push_back(rows.front());  // duplicates do not change the rank
    CHECK(f2_rank(rows) == 3);
}
