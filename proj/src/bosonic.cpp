#include "tetracode/bosonic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tetracode {

std::string PauliString::str() const {
    if (terms.empty()) return "I";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += ' ';
        out += pauli_char(t.pauli);
        out += std::to_string(t.qubit);
    }
    return out;
}

bool pauli_strings_commute(const PauliString& a, const PauliString& b) {
    // Count qubits where both act with different Paulis.
    int anti = 0;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            if (ta.qubit == tb.qubit && ta.pauli != tb.pauli) ++anti;
    return anti % 2 == 0;
}

BitVec BosonicCode::support_of(const PauliString& s) const {
    BitVec v(static_cast<std::size_t>(n));
    for (const auto& t : s.terms) v.set(std::size_t(t.qubit - 1));
    return v;
}

namespace {

// Symplectic (xmask | zmask) vector over 2n bits for rank/membership checks.
BitVec symplectic(const PauliString& s, int n) {
    BitVec v(std::size_t(2 * n));
    for (const auto& t : s.terms) {
        if (t.pauli == Pauli::X || t.pauli == Pauli::Y) v.set(std::size_t(t.qubit - 1));
        if (t.pauli == Pauli::Z || t.pauli == Pauli::Y) v.set(std::size_t(n + t.qubit - 1));
    }
    return v;
}

PauliString make_string(std::string label, Pauli p, const std::vector<int>& qubits) {
    PauliString s;
    s.label = std::move(label);
    for (int q : qubits) s.terms.push_back({q, p});
    return s;
}

// Qubit-wise product of two Pauli strings (phase dropped).
PauliString pauli_product(const std::string& label, const PauliString& a, const PauliString& b) {
    std::map<int, int> acc;  // qubit -> xz bits (1=x, 2=z, 3=y)
    auto mix = [&](const PauliString& s) {
        for (const auto& t : s.terms) {
            int bits = t.pauli == Pauli::X ? 1 : t.pauli == Pauli::Z ? 2 : 3;
            acc[t.qubit] ^= bits;
        }
    };
    mix(a);
    mix(b);
    PauliString out;
    out.label = label;
    for (auto [q, bits] : acc) {
        if (bits == 0) continue;
        out.terms.push_back({q, bits == 1 ? Pauli::X : bits == 2 ? Pauli::Z : Pauli::Y});
    }
    return out;
}

} // namespace

void BosonicCode::validate() const {
    if (n_stabilizers() != n - k)
        throw std::runtime_error("BosonicCode: generator count != n - k");
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!pauli_strings_commute(generators[i], generators[j]))
                throw std::runtime_error("BosonicCode: generators " + generators[i].label +
                                         " and " + generators[j].label + " anticommute");
    std::vector<BitVec> rows;
    for (const auto& g : generators) rows.push_back(symplectic(g, n));
    if (int(f2_rank(rows)) != n - k)
        throw std::runtime_error("BosonicCode: generators not independent");
    if (int(logicals.size()) != 3 * k)
        throw std::runtime_error("BosonicCode: expected 3k logicals");
    F2Basis span;
    for (const auto& r : rows) span.add(r);
    for (int i = 0; i < k; ++i) {
        const auto& lx = logicals[std::size_t(3 * i)];
        const auto& ly = logicals[std::size_t(3 * i + 1)];
        const auto& lz = logicals[std::size_t(3 * i + 2)];
        for (const auto& g : generators)
            for (const auto* l : {&lx, &ly, &lz})
                if (!pauli_strings_commute(*l, g))
                    throw std::runtime_error("BosonicCode: logical " + l->label +
                                             " anticommutes with " + g.label);
        if (pauli_strings_commute(lx, lz))
            throw std::runtime_error("BosonicCode: X and Z logicals commute");
        // X.Y.Z of one logical lies in the stabilizer group (phase-free).
        PauliString xyz = pauli_product("", pauli_product("", lx, ly), lz);
        if (!span.contains(symplectic(xyz, n)))
            throw std::runtime_error("BosonicCode: X.Y.Z not in stabilizer group");
    }
}

BosonicCode steane_code() {
    // Plaquette incidence chosen so the stated logical triple is valid;
    // recorded in the code file rather than inferred from any figure.
    const std::vector<std::vector<int>> plaquettes = {
        {1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 6, 7}};
    BosonicCode c;
    c.family = "steane";
    c.n = 7;
    c.k = 1;
    c.d_b = 3;
    for (std::size_t i = 0; i < plaquettes.size(); ++i)
        c.generators.push_back(make_string("X" + std::to_string(i + 1), Pauli::X, plaquettes[i]));
    for (std::size_t i = 0; i < plaquettes.size(); ++i)
        c.generators.push_back(make_string("Z" + std::to_string(i + 1), Pauli::Z, plaquettes[i]));
    c.logicals.push_back(make_string("LX1", Pauli::X, {1, 3, 5}));
    c.logicals.push_back(make_string("LY1", Pauli::Y, {1, 2, 7}));
    c.logicals.push_back(make_string("LZ1", Pauli::Z, {5, 6, 7}));
    return c;
}

namespace {

struct AxialPoint {
    int q, r;
    bool operator<(const AxialPoint& o) const {
        return q != o.q ? q < o.q : r < o.r;
    }
};

} // namespace

BosonicCode color_code(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("color_code: d must be odd >= 3");
    if (d == 3) {
        BosonicCode c = steane_code();
        c.family = "color";
        return c;
    }
    // Triangular patch of the hexagonal tiling in axial coordinates:
    // points (q, r) with q, r >= 0 and q + r <= 3(d-1)/2. Points with
    // (q - r) % 3 == 1 are hexagon centers; the rest are qubits.
    const int m = 3 * (d - 1) / 2;
    std::vector<AxialPoint> qubit_pts, centers;
    for (int q = 0; q <= m; ++q)
        for (int r = 0; r + q <= m; ++r) {
            if (((q - r) % 3 + 3) % 3 == 1) centers.push_back({q, r});
            else qubit_pts.push_back({q, r});
        }
    std::sort(qubit_pts.begin(), qubit_pts.end());
    std::map<std::pair<int, int>, int> index;  // point -> 1-based qubit
    for (std::size_t i = 0; i < qubit_pts.size(); ++i)
        index[{qubit_pts[i].q, qubit_pts[i].r}] = int(i) + 1;

    BosonicCode c;
    c.family = "color";
    c.n = int(qubit_pts.size());
    c.k = 1;
    c.d_b = d;
    std::vector<std::vector<int>> plaquettes;
    for (const auto& ctr : centers) {
        static const int dq[6] = {1, -1, 0, 0, 1, -1};
        static const int dr[6] = {0, 0, 1, -1, -1, 1};
        std::vector<int> supp;
        for (int i = 0; i < 6; ++i) {
            auto it = index.find({ctr.q + dq[i], ctr.r + dr[i]});
            if (it != index.end()) supp.push_back(it->second);
        }
        std::sort(supp.begin(), supp.end());
        plaquettes.push_back(std::move(supp));
    }
    for (std::size_t i = 0; i < plaquettes.size(); ++i)
        c.generators.push_back(make_string("X" + std::to_string(i + 1), Pauli::X, plaquettes[i]));
    for (std::size_t i = 0; i < plaquettes.size(); ++i)
        c.generators.push_back(make_string("Z" + std::to_string(i + 1), Pauli::Z, plaquettes[i]));

    // One boundary edge of the triangle (r = 0) is a weight-d logical line;
    // the X and Z representatives share it, so build Y as the product.
    std::vector<int> line;
    for (const auto& p : qubit_pts)
        if (p.r == 0) line.push_back(index[{p.q, p.r}]);
    PauliString lx = make_string("LX1", Pauli::X, line);
    PauliString lz = make_string("LZ1", Pauli::Z, line);
    c.logicals.push_back(lx);
    c.logicals.push_back(pauli_product("LY1", lx, lz));
    c.logicals.push_back(lz);
    return c;
}

BosonicCode rotated_surface_code(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("rotated_surface_code: d must be odd >= 3");
    BosonicCode c;
    c.family = "surface";
    c.n = d * d;
    c.k = 1;
    c.d_b = d;
    auto qubit = [d](int row, int col) { return row * d + col + 1; };  // 1-based
    std::vector<std::vector<int>> xfaces, zfaces;
    for (int fi = 0; fi <= d; ++fi)
        for (int fj = 0; fj <= d; ++fj) {
            std::vector<int> qs;
            for (auto [r, col] : {std::pair{fi - 1, fj - 1}, {fi - 1, fj}, {fi, fj - 1}, {fi, fj}})
                if (r >= 0 && r < d && col >= 0 && col < d) qs.push_back(qubit(r, col));
            if (qs.size() < 2) continue;
            bool is_x = (fi + fj) % 2 == 1;
            bool bulk = fi >= 1 && fi <= d - 1 && fj >= 1 && fj <= d - 1;
            if (bulk) (is_x ? xfaces : zfaces).push_back(qs);
            else if ((fi == 0 || fi == d) && is_x) xfaces.push_back(qs);   // top/bottom: X
            else if ((fj == 0 || fj == d) && !is_x) zfaces.push_back(qs);  // left/right: Z
        }
    for (std::size_t i = 0; i < xfaces.size(); ++i)
        c.generators.push_back(make_string("X" + std::to_string(i + 1), Pauli::X, xfaces[i]));
    for (std::size_t i = 0; i < zfaces.size(); ++i)
        c.generators.push_back(make_string("Z" + std::to_string(i + 1), Pauli::Z, zfaces[i]));

    std::vector<int> col0, row0;
    for (int r = 0; r < d; ++r) col0.push_back(qubit(r, 0));
    for (int col = 0; col < d; ++col) row0.push_back(qubit(0, col));
    PauliString lx = make_string("LX1", Pauli::X, col0);
    PauliString lz = make_string("LZ1", Pauli::Z, row0);
    c.logicals.push_back(lx);
    c.logicals.push_back(pauli_product("LY1", lx, lz));
    c.logicals.push_back(lz);
    return c;
}

BosonicCode bosonic_code_by_family(const std::string& family, int d) {
    if (family == "steane") {
        if (d != 3) throw std::invalid_argument("steane family has d = 3 only");
        return steane_code();
    }
    if (family == "color") return color_code(d);
    if (family == "surface") return rotated_surface_code(d);
    throw std::invalid_argument("unknown code family: " + family);
}

int bosonic_distance_brute_force(const BosonicCode& code, int w_max) {
    const int n = code.n;
    std::vector<BitVec> gen_sympl;
    for (const auto& g : code.generators) gen_sympl.push_back(symplectic(g, n));
    F2Basis span;
    for (const auto& r : gen_sympl) span.add(r);

    // Enumerate supports of weight w, then all 3^w Pauli assignments.
    std::vector<int> supp;
    static const Pauli paulis[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int w = 1; w <= std::min(w_max, n); ++w) {
        std::vector<int> idx(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) idx[std::size_t(i)] = i;
        for (;;) {
            std::vector<int> assign(std::size_t(w), 0);
            for (;;) {
                PauliString s;
                for (int i = 0; i < w; ++i)
                    s.terms.push_back({idx[std::size_t(i)] + 1, paulis[assign[std::size_t(i)]]});
                bool commuting = true;
                for (const auto& g : code.generators)
                    if (!pauli_strings_commute(s, g)) { commuting = false; break; }
                if (commuting && !span.contains(symplectic(s, n))) return w;
                int pos = w - 1;
                while (pos >= 0 && assign[std::size_t(pos)] == 2) assign[std::size_t(pos--)] = 0;
                if (pos < 0) break;
                ++assign[std::size_t(pos)];
            }
            int pos = w - 1;
            while (pos >= 0 && idx[std::size_t(pos)] == n - w + pos) --pos;
            if (pos < 0) break;
            ++idx[std::size_t(pos)];
            for (int i = pos + 1; i < w; ++i) idx[std::size_t(i)] = idx[std::size_t(i - 1)] + 1;
        }
    }
    return 0;
}

} // namespace tetracode
