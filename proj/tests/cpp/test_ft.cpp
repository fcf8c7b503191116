#include "doctest.h"

#include "tetracode/factory.hpp"
#include "tetracode/ft.hpp"

using namespace tetracode;

TEST_CASE("default sequence structure") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 3);
    CHECK(seq.n_steps() == 39);  // 13 serial rounds, repeated three times
    CHECK(seq.n_measurements() == 39);
    CHECK(seq.data_steps_per_round == 13);
    CHECK_NOTHROW(validate_ft_sequence(fc, seq));
    CHECK(seq.content_hash() == default_ft_sequence(fc, 3).content_hash());
    CHECK(seq.content_hash() != default_ft_sequence(fc, 2).content_hash());
}

TEST_CASE("sequence validation rejects bad inputs") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 3);

    FtSequence truncated;  // set-0 only, single pass: rank deficient
    truncated.data_steps_per_round = 6;
    for (const auto& g : fc.generators) {
        if (g.set != 0) continue;
        truncated.steps.push_back({{g.label, g.terms, g.op}});
    }
    CHECK_THROWS_WITH_AS(validate_ft_sequence(fc, truncated),
                         doctest::Contains("rank"), std::invalid_argument);

    FtSequence twice = seq;
    twice.steps[0].push_back(twice.steps[0][0]);
    CHECK_THROWS(validate_ft_sequence(fc, twice));

    FtSequence nonstab = seq;
    MajoranaOp bogus(fc.n_maj());
    bogus.flip(0);
    bogus.flip(1);
    nonstab.steps[0][0].op = bogus;  // Z_1 alone is not a stabilizer
    CHECK_THROWS(validate_ft_sequence(fc, nonstab));
}

TEST_CASE("sequence files round-trip") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 2);
    std::string text = ft_sequence_to_json(seq);
    FtSequence loaded = ft_sequence_from_json(fc, text);
    CHECK(ft_sequence_to_json(loaded) == text);
    CHECK(loaded.content_hash() == seq.content_hash());
}

TEST_CASE("ft graph shape") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 3);
    FtGraph fg = build_ft_graph(fc, seq, NoiseModel(0.01, 1.0));
    CHECK(fg.chain_op.size() == 13);
    CHECK(fg.n_events == 39);
    CHECK(fg.graph.n_rows == 52);  // 13 chains, 3 events each, plus final detectors
    CHECK(fg.graph.n_cols == 39 * 7 * 7 + 39);
    // flip columns touch exactly two detectors
    for (int ev = 0; ev < fg.n_events; ++ev)
        CHECK(fg.graph.col_bits[std::size_t(fg.n_data_cols + ev)].weight() == 2);
}

TEST_CASE("noise-free ft runs never fail") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 3);
    SimConfig cfg;
    cfg.trials = 200;
    cfg.seed = 21;
    auto pts = run_ft(fc, seq, {NoiseModel(0.0, 1.0)}, cfg);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].failures == 0);
}

TEST_CASE("ft runs are deterministic across worker counts") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 2);
    SimConfig a;
    a.trials = 400;
    a.seed = 8;
    a.workers = 1;
    SimConfig b = a;
    b.workers = 3;
    auto pa = run_ft(fc, seq, {NoiseModel(0.02, 1.0)}, a);
    auto pb = run_ft(fc, seq, {NoiseModel(0.02, 1.0)}, b);
    CHECK(pa[0].failures == pb[0].failures);
    CHECK(capacity_csv(pa) == capacity_csv(pb));
}

TEST_CASE("single faults on the default sequence never cause a logical error") {
    FermionCode fc = b_to_f(steane_code());
    FtSequence seq = default_ft_sequence(fc, 3);
    InjectReport rep = inject_single_faults(fc, seq);
    INFO(rep.first_failure);
    CHECK(rep.cases == 39 * 7 * 7 + 39);
    CHECK(rep.failures == 0);
    CHECK(rep.pass());
}
