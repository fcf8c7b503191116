#include "tetracode/factory.hpp"

#include <stdexcept>

#include "tetracode/scheduler.hpp"

namespace tetracode {

PickPolicy pick_policy_from_string(const std::string& s) {
    if (s == "default") return PickPolicy::Default;
    if (s == "scheduled") return PickPolicy::Scheduled;
    throw std::invalid_argument("unknown pick policy: " + s);
}

FermionCode build_fermion_code(const std::string& family, int d, PickPolicy policy,
                               uint64_t seed) {
    BosonicCode base = bosonic_code_by_family(family, d);
    if (policy == PickPolicy::Scheduled) {
        auto pick = find_schedulable_pick(base, sets_round_target(base.family), seed);
        if (pick) return b_to_f(base, *pick);
    }
    return b_to_f(base);
}

} // namespace tetracode
