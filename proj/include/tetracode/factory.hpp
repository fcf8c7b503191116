#pragma once

#include <string>

#include "tetracode/fermion.hpp"

namespace tetracode {

enum class PickPolicy {
    Default,    // lowest-index covering generator, X/Z alternating
    Scheduled,  // joint pick-and-round search against the family step target
};

PickPolicy pick_policy_from_string(const std::string& s);

/// Build the fermionic code for a family and distance. The scheduled policy
/// searches for a pick whose sets-1..n phase fits the paper step target and
/// falls back to the default pick when the search budget runs out.
FermionCode build_fermion_code(const std::string& family, int d,
                               PickPolicy policy = PickPolicy::Scheduled,
                               uint64_t seed = 12345);

} // namespace tetracode
