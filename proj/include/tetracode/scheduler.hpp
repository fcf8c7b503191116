#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetracode/fermion.hpp"

namespace tetracode {

/// Measurement rounds: within a round all generators have pairwise disjoint
/// tetron support. Latency is the number of rounds.
struct Schedule {
    struct Round {
        std::string phase;       // "set0-X", "set0-Z", "sets-i", "dsatur"
        std::vector<int> gens;   // generator indices into code.generators
    };
    std::vector<Round> rounds;

    int latency() const { return int(rounds.size()); }
};

enum class ScheduleStrategy { PhasedGreedy, Dsatur };

ScheduleStrategy schedule_strategy_from_string(const std::string& s);

/// Tetrons touched by a generator (1-based, ascending).
std::vector<int> tetron_support(const FermionCode& code, int gen);

struct ConflictGraph {
    std::vector<int> gens;              // generator indices, the vertex order
    std::vector<std::vector<int>> adj;  // adjacency by vertex position
};

/// Vertices are the selected generators; edges join generators sharing a tetron.
ConflictGraph conflict_graph(const FermionCode& code, const std::vector<int>& subset);

struct ScheduleCheck {
    bool ok = true;
    std::string violation;  // names the shared tetron or missing generator
};

ScheduleCheck verify_schedule(const FermionCode& code, const Schedule& sched);

/// max over tetrons of the number of generators touching it.
int schedule_lower_bound(const FermionCode& code);

/// Phased mode colors set-0 X, set-0 Z and sets 1..n independently and
/// concatenates; dsatur colors the whole conflict graph at once.
Schedule schedule(const FermionCode& code, ScheduleStrategy strategy, uint64_t seed = 12345);

/// Joint pick-and-round search: choose pick(i) and a round below
/// `rounds_target` for every qubit so that each round is tetron-disjoint.
/// Returns the pick map on success.
std::optional<std::vector<int>> find_schedulable_pick(const BosonicCode& base,
                                                      int rounds_target,
                                                      uint64_t seed = 12345,
                                                      int max_attempts = 50000);

/// Paper step targets for the sets-1..n phase: 7 for the color family,
/// 4 for the surface family.
int sets_round_target(const std::string& family);

} // namespace tetracode
