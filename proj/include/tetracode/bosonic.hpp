#pragma once

#include <string>
#include <vector>

#include "tetracode/bitvec.hpp"
#include "tetracode/majorana.hpp"

namespace tetracode {

/// One qubit-level Pauli factor (no rep flag; that is fixed at the
/// Majorana-mapping stage).
struct QubitPauli {
    int qubit = 0;   // 1-based
    Pauli pauli = Pauli::X;
    bool operator==(const QubitPauli& o) const {
        return qubit == o.qubit && pauli == o.pauli;
    }
};

/// Pauli string = product of single-qubit factors, at most one per qubit.
struct PauliString {
    std::string label;
    std::vector<QubitPauli> terms;

    std::string str() const;
};

bool pauli_strings_commute(const PauliString& a, const PauliString& b);

/// Qubit-level stabilizer code [[n, k, d_b]] with labeled generators and
/// 3k logical representatives (X, Y, Z per logical qubit).
struct BosonicCode {
    std::string family;   // "steane", "color", "surface"
    int n = 0;
    int k = 0;
    int d_b = 0;
    std::vector<PauliString> generators;
    std::vector<PauliString> logicals;  // X1,Y1,Z1, X2,Y2,Z2, ...

    int n_stabilizers() const { return int(generators.size()); }

    /// Support bitmask over qubits (bit q-1 set iff qubit q appears).
    BitVec support_of(const PauliString& s) const;

    /// Throws on violated invariants: generator commutation, count n-k,
    /// logical/generator commutation, logical pairing.
    void validate() const;
};

/// The [[7,1,3]] code with the qubit numbering that makes
/// X1 X3 X5, Y1 Y2 Y7, Z5 Z6 Z7 a valid logical triple.
BosonicCode steane_code();

/// Triangular 6.6.6 color code of odd distance d >= 3 (n = (3d^2+1)/4).
/// d == 3 returns the steane numbering with family "color".
BosonicCode color_code(int d);

/// Rotated surface code of odd distance d >= 3 (n = d^2).
BosonicCode rotated_surface_code(int d);

BosonicCode bosonic_code_by_family(const std::string& family, int d);

/// Brute-force qubit distance: least weight of a Pauli string commuting with
/// all generators but outside the generator span, searched up to w_max.
/// Returns 0 when no logical of weight <= w_max exists.
int bosonic_distance_brute_force(const BosonicCode& code, int w_max);

} // namespace tetracode
