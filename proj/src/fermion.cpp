#include "tetracode/fermion.hpp"

#include <stdexcept>

namespace tetracode {

std::string FermionCode::params_str() const {
    return "[[" + std::to_string(2 * n_tetrons()) + "," + std::to_string(k) + "," +
           std::to_string(d_f) + "f]]";
}

BitVec FermionCode::syndrome(const MajoranaOp& error) const {
    BitVec s(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g)
        if (!commutes(error, generators[g].op)) s.set(g);
    return s;
}

bool FermionCode::in_stabilizer_group(const MajoranaOp& op) const {
    return stab_basis_.contains(op.support());
}

void FermionCode::build_stabilizer_basis() {
    stab_basis_ = F2Basis();
    for (const auto& g : generators) stab_basis_.add(g.op.support());
}

std::vector<int> default_pick(const BosonicCode& base) {
    std::vector<int> pick(std::size_t(base.n), -1);
    for (int i = 1; i <= base.n; ++i) {
        int first_any = -1;
        int preferred = -1;
        bool want_x = i % 2 == 1;
        for (std::size_t g = 0; g < base.generators.size(); ++g) {
            const auto& gen = base.generators[g];
            bool covers = false;
            bool is_x = !gen.terms.empty() && gen.terms.front().pauli == Pauli::X;
            for (const auto& t : gen.terms)
                if (t.qubit == i) { covers = true; break; }
            if (!covers) continue;
            if (first_any < 0) first_any = int(g);
            if (preferred < 0 && is_x == want_x) preferred = int(g);
        }
        if (first_any < 0)
            throw std::runtime_error("default_pick: no generator covers qubit " + std::to_string(i));
        pick[std::size_t(i - 1)] = preferred >= 0 ? preferred : first_any;
    }
    return pick;
}

FermionCode b_to_f(const BosonicCode& base, const std::vector<int>& pick) {
    if (int(pick.size()) != base.n)
        throw std::invalid_argument("b_to_f: pick must name one generator per qubit");
    FermionCode fc;
    fc.layout = TetronLayout(base.n);
    fc.base = base;
    fc.k = base.k;
    fc.d_f = 2 * base.d_b;
    fc.pick = pick;

    auto terms_for = [](const PauliString& s, int switched_tetron) {
        std::vector<PauliTerm> terms;
        for (const auto& t : s.terms)
            terms.push_back({t.qubit, t.pauli, t.qubit == switched_tetron ? Rep::RPrime : Rep::R});
        return terms;
    };

    for (std::size_t g = 0; g < base.generators.size(); ++g) {
        FermionGenerator fg;
        fg.label = "s0:" + base.generators[g].label;
        fg.set = 0;
        fg.base_index = int(g);
        fg.terms = terms_for(base.generators[g], 0);
        fg.op = pauli_string_to_majorana(fg.terms, fc.layout);
        fc.generators.push_back(std::move(fg));
    }
    for (int i = 1; i <= base.n; ++i) {
        int g = pick[std::size_t(i - 1)];
        if (g < 0 || g >= int(base.generators.size()))
            throw std::invalid_argument("b_to_f: pick(" + std::to_string(i) + ") out of range");
        const auto& gen = base.generators[std::size_t(g)];
        bool covers = false;
        for (const auto& t : gen.terms)
            if (t.qubit == i) covers = true;
        if (!covers)
            throw std::invalid_argument("b_to_f: pick(" + std::to_string(i) +
                                        ") = " + gen.label + " is not supported on that qubit");
        FermionGenerator fg;
        fg.label = "s" + std::to_string(i) + ":" + gen.label;
        fg.set = i;
        fg.base_index = g;
        fg.terms = terms_for(gen, i);
        fg.op = pauli_string_to_majorana(fg.terms, fc.layout);
        fc.generators.push_back(std::move(fg));
    }

    for (const auto& l : base.logicals) {
        std::vector<PauliTerm> terms = terms_for(l, 0);
        fc.logical_terms.push_back(terms);
        fc.logicals.push_back(pauli_string_to_majorana(terms, fc.layout));
    }

    fc.build_stabilizer_basis();
    int want = 2 * base.n - base.k;
    if (int(fc.stabilizer_basis().rank()) != want)
        throw std::runtime_error("b_to_f: stabilizer rank " +
                                 std::to_string(fc.stabilizer_basis().rank()) + " != " +
                                 std::to_string(want) + " (construction bug)");
    return fc;
}

FermionCode b_to_f(const BosonicCode& base) { return b_to_f(base, default_pick(base)); }

int f2_rank_of(const std::vector<MajoranaOp>& ops) {
    std::vector<BitVec> rows;
    rows.reserve(ops.size());
    for (const auto& op : ops) rows.push_back(op.support());
    return int(f2_rank(rows));
}

uint64_t min_logical_weight_cost(int n_maj, int w_max) {
    uint64_t total = 0;
    for (int w = 2; w <= w_max; w += 2) {
        // C(n_maj, w), saturating
        uint64_t c = 1;
        for (int i = 0; i < w; ++i) {
            if (c > (uint64_t(1) << 62) / uint64_t(n_maj)) return UINT64_MAX;
            c = c * uint64_t(n_maj - i) / uint64_t(i + 1);
        }
        total += c;
    }
    return total;
}

DistanceResult min_logical_weight(const FermionCode& code, int w_max, uint64_t budget) {
    const int nm = code.n_maj();
    if (min_logical_weight_cost(nm, w_max) > budget)
        throw std::runtime_error("min_logical_weight: enumeration exceeds budget");
    for (int w = 2; w <= w_max; w += 2) {
        std::vector<int> idx(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) idx[std::size_t(i)] = i;
        for (;;) {
            MajoranaOp cand(nm);
            for (int b : idx) cand.flip(b);
            bool zero_syndrome = true;
            for (const auto& g : code.generators)
                if (!commutes(cand, g.op)) { zero_syndrome = false; break; }
            if (zero_syndrome && !code.in_stabilizer_group(cand)) return {true, w};
            int pos = w - 1;
            while (pos >= 0 && idx[std::size_t(pos)] == nm - w + pos) --pos;
            if (pos < 0) break;
            ++idx[std::size_t(pos)];
            for (int i = pos + 1; i < w; ++i) idx[std::size_t(i)] = idx[std::size_t(i - 1)] + 1;
        }
    }
    return {false, w_max};
}

MajoranaOp bosonic_fermionic_alias(int tetron, Mzm x, const TetronLayout& layout) {
    MajoranaOp out(layout.n_maj());
    if (x == Mzm::D) return out;  // gamma_d is invisible; alias is the identity
    out.flip(layout.mzm_index(tetron, x));
    out.flip(layout.mzm_index(tetron, Mzm::D));
    return out;
}

} // namespace tetracode
