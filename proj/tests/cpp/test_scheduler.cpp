#include "doctest.h"

#include <numeric>

#include "tetracode/factory.hpp"
#include "tetracode/scheduler.hpp"

using namespace tetracode;

TEST_CASE("conflict graph of the 14-MZM code is complete") {
    FermionCode fc = b_to_f(steane_code());
    std::vector<int> all(static_cast<std::size_t>(fc.n_generators()));
    std::iota(all.begin(), all.end(), 0);
    ConflictGraph g = conflict_graph(fc, all);
    for (const auto& adj : g.adj) CHECK(adj.size() == 12);  // K13

    ConflictGraph single = conflict_graph(fc, {0});
    CHECK(single.adj[0].empty());
}

TEST_CASE("steane-derived code schedules in exactly 13 rounds") {
    FermionCode fc = b_to_f(steane_code());
    Schedule s = schedule(fc, ScheduleStrategy::PhasedGreedy);
    CHECK(s.latency() == 13);
    CHECK(verify_schedule(fc, s).ok);
    CHECK(schedule_lower_bound(fc) <= s.latency());
}

TEST_CASE("color family meets the 13-step latency") {
    for (int d : {5, 7}) {
        FermionCode fc = build_fermion_code("color", d, PickPolicy::Scheduled);
        Schedule s = schedule(fc, ScheduleStrategy::PhasedGreedy);
        INFO("d = ", d, " latency = ", s.latency());
        CHECK(s.latency() <= 13);
        CHECK(verify_schedule(fc, s).ok);
        // set-0 plaquettes are 3-colorable
        int x_rounds = 0, z_rounds = 0, i_rounds = 0;
        for (const auto& r : s.rounds) {
            if (r.phase == "set0-X") ++x_rounds;
            else if (r.phase == "set0-Z") ++z_rounds;
            else ++i_rounds;
        }
        CHECK(x_rounds == 3);
        CHECK(z_rounds == 3);
        CHECK(i_rounds <= 7);
    }
}

TEST_CASE("surface family meets the 8-step latency") {
    FermionCode fc = build_fermion_code("surface", 5, PickPolicy::Scheduled);
    Schedule s = schedule(fc, ScheduleStrategy::PhasedGreedy);
    CHECK(s.latency() <= 8);
    CHECK(verify_schedule(fc, s).ok);
    int x_rounds = 0, z_rounds = 0, i_rounds = 0;
    for (const auto& r : s.rounds) {
        if (r.phase == "set0-X") ++x_rounds;
        else if (r.phase == "set0-Z") ++z_rounds;
        else ++i_rounds;
    }
    CHECK(x_rounds == 2);
    CHECK(z_rounds == 2);
    CHECK(i_rounds <= 4);
}

TEST_CASE("dsatur produces valid schedules no worse than sequential") {
    for (const char* family : {"color", "surface"}) {
        FermionCode fc = build_fermion_code(family, 5, PickPolicy::Scheduled);
        Schedule s = schedule(fc, ScheduleStrategy::Dsatur);
        CHECK(verify_schedule(fc, s).ok);
        CHECK(s.latency() <= fc.n_generators());
        CHECK(s.latency() >= schedule_lower_bound(fc));
    }
}

TEST_CASE("verify_schedule names violations") {
    FermionCode fc = b_to_f(steane_code());
    Schedule bad;
    bad.rounds.push_back({"x", {0, 1}});  // plaquettes always share a tetron
    for (int g = 2; g < fc.n_generators(); ++g) bad.rounds.push_back({"x", {g}});
    ScheduleCheck chk = verify_schedule(fc, bad);
    CHECK(!chk.ok);
    CHECK(chk.violation.find("share tetron") != std::string::npos);

    Schedule missing;
    missing.rounds.push_back({"x", {0}});
    CHECK(!verify_schedule(fc, missing).ok);

    Schedule duplicated = schedule(fc, ScheduleStrategy::PhasedGreedy);
    duplicated.rounds.push_back({"x", {0}});
    CHECK(!verify_schedule(fc, duplicated).ok);
}

TEST_CASE("schedulable picks cover their qubits") {
    BosonicCode base = rotated_surface_code(5);
    auto pick = find_schedulable_pick(base, 4);
    REQUIRE(pick.has_value());
    for (int i = 1; i <= base.n; ++i) {
        const auto& gen = base.generators[std::size_t((*pick)[std::size_t(i - 1)])];
        bool covers = false;
        for (const auto& t : gen.terms)
            if (t.qubit == i) covers = true;
        CHECK(covers);
    }
}
