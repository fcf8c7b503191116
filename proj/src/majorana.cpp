#include "tetracode/majorana.hpp"

#include <stdexcept>

namespace tetracode {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli: ") + c);
}

char mzm_char(Mzm m) { return char('a' + int(m)); }

Mzm mzm_from_char(char c) {
    if (c < 'a' || c > 'd') throw std::invalid_argument(std::string("not an MZM location: ") + c);
    return Mzm(c - 'a');
}

std::string MajoranaOp::str() const {
    if (identity()) return "I";
    std::string out;
    for (std::size_t b : support_.ones()) {
        if (!out.empty()) out += ' ';
        out += 'g';
        out += std::to_string(b);
    }
    return out;
}

MajoranaOp multiply(const MajoranaOp& a, const MajoranaOp& b) {
    if (a.n_maj() != b.n_maj())
        throw std::invalid_argument("multiply: mismatched n_maj");
    MajoranaOp out = a;
    out.support() ^= b.support();
    return out;
}

bool commutes(const MajoranaOp& a, const MajoranaOp& b) {
    if (a.n_maj() != b.n_maj())
        throw std::invalid_argument("commutes: mismatched n_maj");
    std::size_t sign = a.weight() * b.weight() + a.support().overlap(b.support());
    return sign % 2 == 0;
}

namespace {
// Pair of MZM locations for each (Pauli, rep).
struct LocPair { Mzm first, second; };

LocPair rep_pair(Pauli p, Rep rep) {
    if (rep == Rep::R) {
        switch (p) {
            case Pauli::X: return {Mzm::B, Mzm::C};
            case Pauli::Y: return {Mzm::A, Mzm::C};
            case Pauli::Z: return {Mzm::A, Mzm::B};
        }
    } else {
        switch (p) {
            case Pauli::X: return {Mzm::A, Mzm::D};
            case Pauli::Y: return {Mzm::D, Mzm::B};
            case Pauli::Z: return {Mzm::C, Mzm::D};
        }
    }
    throw std::logic_error("rep_pair: unreachable");
}
} // namespace

MajoranaOp pauli_to_majorana(const PauliTerm& term, const TetronLayout& layout) {
    LocPair lp = rep_pair(term.pauli, term.rep);
    MajoranaOp out(layout.n_maj());
    out.flip(layout.mzm_index(term.tetron, lp.first));
    out.flip(layout.mzm_index(term.tetron, lp.second));
    return out;
}

MajoranaOp tetron_op(int tetron, const TetronLayout& layout) {
    MajoranaOp out(layout.n_maj());
    for (Mzm m : {Mzm::A, Mzm::B, Mzm::C, Mzm::D})
        out.flip(layout.mzm_index(tetron, m));
    return out;
}

MajoranaOp pauli_string_to_majorana(const std::vector<PauliTerm>& terms,
                                    const TetronLayout& layout) {
    std::vector<bool> seen(std::size_t(layout.n_tetrons) + 1, false);
    MajoranaOp out(layout.n_maj());
    for (const auto& t : terms) {
        if (t.tetron < 1 || t.tetron > layout.n_tetrons)
            throw std::out_of_range("pauli_string_to_majorana: tetron out of range");
        if (seen[std::size_t(t.tetron)])
            throw std::invalid_argument("pauli_string_to_majorana: duplicate tetron");
        seen[std::size_t(t.tetron)] = true;
        out.support() ^= pauli_to_majorana(t, layout).support();
    }
    return out;
}

} // namespace tetracode
