#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetracode/bosonic.hpp"
#include "tetracode/majorana.hpp"

namespace tetracode {

/// One fermionic stabilizer generator with its provenance: which set it
/// belongs to (0, or i = tetron whose Pauli is switched to R') and which
/// base generator it came from.
struct FermionGenerator {
    std::string label;            // "s0:X1", "s12:Z3", ...
    int set = 0;                  // 0 or tetron index 1..n
    int base_index = -1;          // index into base generators
    std::vector<PauliTerm> terms; // Pauli-with-rep form
    MajoranaOp op;                // realized support
};

/// Majorana code [[2n, k, d_f]] on n tetrons built from a bosonic base code.
struct FermionCode {
    TetronLayout layout;
    BosonicCode base;
    int k = 0;
    int d_f = 0;  // claimed distance, 2 * d_b
    std::vector<FermionGenerator> generators;  // n_s set-0 rows first, then sets 1..n
    std::vector<std::vector<PauliTerm>> logical_terms;  // X,Y,Z per logical, rep R
    std::vector<MajoranaOp> logicals;
    std::vector<int> pick;  // pick[i] = base generator index for tetron i+1

    int n_tetrons() const { return layout.n_tetrons; }
    int n_maj() const { return layout.n_maj(); }
    int n_generators() const { return int(generators.size()); }

    std::string params_str() const;  // "[[14,1,6f]]"

    /// Syndrome bit per generator: 1 iff the error anticommutes with it.
    BitVec syndrome(const MajoranaOp& error) const;

    bool in_stabilizer_group(const MajoranaOp& op) const;

    /// Rebuilds the internal reduced basis (called by b_to_f and loaders).
    void build_stabilizer_basis();

    const F2Basis& stabilizer_basis() const { return stab_basis_; }

private:
    F2Basis stab_basis_;
};

/// Default pick: the lowest-index base generator covering qubit i, preferring
/// X-type rows for odd i and Z-type for even i to balance the schedule.
std::vector<int> default_pick(const BosonicCode& base);

/// The B->F construction. Set 0 holds every base stabilizer mapped through R;
/// set i holds the picked base stabilizer with tetron i's Pauli switched to
/// R'. Throws if pick(i) does not cover qubit i or the resulting group does
/// not reach rank 2n - k.
FermionCode b_to_f(const BosonicCode& base, const std::vector<int>& pick);

FermionCode b_to_f(const BosonicCode& base);

int f2_rank_of(const std::vector<MajoranaOp>& ops);

struct DistanceResult {
    bool found = false;
    int value = 0;  // min logical weight when found, else the searched bound
};

/// Exhaustive minimum logical weight: least even weight of a zero-syndrome
/// operator outside the stabilizer group, searched through w_max. Refuses
/// (throws) when the enumeration count exceeds budget.
DistanceResult min_logical_weight(const FermionCode& code, int w_max,
                                  uint64_t budget = 500'000'000);

/// Count of support enumerations min_logical_weight would visit.
uint64_t min_logical_weight_cost(int n_maj, int w_max);

/// The bosonic-decoder alias of a single-MZM error: gamma_x on tetron q reads
/// as the weight-2 error gamma_x gamma_d (identity for x = d).
MajoranaOp bosonic_fermionic_alias(int tetron, Mzm x, const TetronLayout& layout);

} // namespace tetracode
