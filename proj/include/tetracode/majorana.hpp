#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetracode/bitvec.hpp"

namespace tetracode {

/// MZM location on a tetron. Index offsets follow a=0, b=1, c=2, d=3.
enum class Mzm : uint8_t { A = 0, B = 1, C = 2, D = 3 };

enum class Pauli : uint8_t { X, Y, Z };

/// Which weight-2 representation a Pauli maps to on its tetron.
enum class Rep : uint8_t { R, RPrime };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
char mzm_char(Mzm m);
Mzm mzm_from_char(char c);

/// Fixed map from (tetron, MZM location) to a flat MZM index.
/// Tetron q runs 1..n_tetrons; MZM index is 4(q-1) + offset.
struct TetronLayout {
    int n_tetrons = 0;

    TetronLayout() = default;
    explicit TetronLayout(int n) : n_tetrons(n) {
        if (n <= 0) throw std::invalid_argument("TetronLayout: n_tetrons must be positive");
    }

    int n_maj() const { return 4 * n_tetrons; }

    int mzm_index(int tetron, Mzm loc) const {
        if (tetron < 1 || tetron > n_tetrons)
            throw std::out_of_range("mzm_index: tetron out of range");
        return 4 * (tetron - 1) + int(loc);
    }

    /// Tetron (1-based) owning a flat MZM index.
    int tetron_of(int mzm) const { return mzm / 4 + 1; }

    bool operator==(const TetronLayout& o) const { return n_tetrons == o.n_tetrons; }
};

/// A Pauli on one tetron together with its representation flag.
struct PauliTerm {
    int tetron = 0;     // 1-based
    Pauli pauli = Pauli::X;
    Rep rep = Rep::R;

    bool operator==(const PauliTerm& o) const {
        return tetron == o.tetron && pauli == o.pauli && rep == o.rep;
    }
};

/// Phase-free Majorana operator: the support set of gamma factors as a bit
/// vector of length n_maj. Global phases are dropped; syndromes, commutation
/// and group membership depend only on supports.
class MajoranaOp {
public:
    MajoranaOp() = default;
    explicit MajoranaOp(int n_maj) : support_(n_maj) {
        if (n_maj <= 0 || n_maj % 2 != 0)
            throw std::invalid_argument("MajoranaOp: n_maj must be positive even");
    }
    MajoranaOp(int n_maj, const std::vector<int>& bits) : MajoranaOp(n_maj) {
        for (int b : bits) {
            if (b < 0 || b >= n_maj) throw std::out_of_range("MajoranaOp: bit out of range");
            support_.set(static_cast<std::size_t>(b));
        }
    }

    int n_maj() const { return int(support_.size()); }
    std::size_t weight() const { return support_.weight(); }
    bool identity() const { return !support_.any(); }
    bool even_weight() const { return weight() % 2 == 0; }

    bool has(int bit) const { return support_.get(static_cast<std::size_t>(bit)); }
    void flip(int bit) { support_.flip(static_cast<std::size_t>(bit)); }

    const BitVec& support() const { return support_; }
    BitVec& support() { return support_; }

    bool operator==(const MajoranaOp& o) const { return support_ == o.support_; }
    bool operator!=(const MajoranaOp& o) const { return !(*this == o); }

    /// Human-readable form like "g0 g5 g12" (flat MZM indices), "I" when empty.
    std::string str() const;

private:
    BitVec support_;
};

/// Group product in the phase-free convention: supports add mod 2.
MajoranaOp multiply(const MajoranaOp& a, const MajoranaOp& b);

/// True iff |A|.|B| + |A intersect B| is even.
bool commutes(const MajoranaOp& a, const MajoranaOp& b);

/// Weight-2 image of a Pauli on its tetron: R uses {X=bc, Y=ac, Z=ab},
/// R' uses {X'=ad, Y'=db, Z'=cd}.
MajoranaOp pauli_to_majorana(const PauliTerm& term, const TetronLayout& layout);

/// The weight-4 operator on all four MZMs of tetron q.
MajoranaOp tetron_op(int tetron, const TetronLayout& layout);

/// XOR of per-term images. Requires at most one term per tetron.
MajoranaOp pauli_string_to_majorana(const std::vector<PauliTerm>& terms,
                                    const TetronLayout& layout);

} // namespace tetracode
