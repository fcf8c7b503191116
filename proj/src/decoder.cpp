#include "tetracode/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tetracode {

namespace {
constexpr double kLlrClamp = 35.0;

double prior_llr(double p) {
    double q = std::clamp(p, 1e-15, 1.0 - 1e-15);
    return std::clamp(std::log((1.0 - q) / q), -kLlrClamp, kLlrClamp);
}
} // namespace

void DecoderGraph::add_column(const BitVec& rows_hit, double p, MajoranaOp op) {
    col_bits.push_back(rows_hit);
    prior.push_back(p);
    col_op.push_back(std::move(op));
    ++n_cols;
}

void DecoderGraph::finalize() {
    row_cols.assign(std::size_t(n_rows), {});
    col_rows.assign(std::size_t(n_cols), {});
    for (int c = 0; c < n_cols; ++c)
        for (std::size_t r : col_bits[std::size_t(c)].ones()) {
            row_cols[r].push_back(c);
            col_rows[std::size_t(c)].push_back(int(r));
        }
}

BitVec DecoderGraph::syndrome_of_columns(const std::vector<int>& cols) const {
    BitVec s(static_cast<std::size_t>(n_rows));
    for (int c : cols) s ^= col_bits[std::size_t(c)];
    return s;
}

DecoderGraph build_decoder_graph(const FermionCode& code, const NoiseModel& model) {
    ChannelProbs probs = channel_probs(model);
    DecoderGraph g;
    g.n_rows = code.n_generators();
    for (int r = 0; r < g.n_rows; ++r) g.row_gen.push_back(r);
    for (int q = 1; q <= code.n_tetrons(); ++q)
        for (int m = 0; m < kNumMechanisms; ++m) {
            MajoranaOp op = mechanism_op(q, Mechanism(m), code.layout);
            BitVec bits = code.syndrome(op);
            g.add_column(bits, probs.mech[std::size_t(m)], std::move(op));
            g.col_mech.emplace_back(q, Mechanism(m));
        }
    g.finalize();
    return g;
}

DecoderGraph build_bosonic_decoder_graph(const FermionCode& code, const NoiseModel& model) {
    ChannelProbs probs = channel_probs(model);
    std::vector<int> set0;
    for (int i = 0; i < code.n_generators(); ++i)
        if (code.generators[std::size_t(i)].set == 0) set0.push_back(i);

    DecoderGraph g;
    g.n_rows = int(set0.size());
    g.row_gen = set0;
    for (int q = 1; q <= code.n_tetrons(); ++q)
        for (int m = 0; m < 3; ++m) {
            MajoranaOp op = mechanism_op(q, Mechanism(m), code.layout);
            BitVec bits(set0.size());
            for (std::size_t r = 0; r < set0.size(); ++r)
                if (!commutes(op, code.generators[std::size_t(set0[r])].op)) bits.set(r);
            // gamma_a aliases to X, gamma_b to Y, gamma_c to Z
            double p = probs.mech[std::size_t(m)] + probs.mech[std::size_t(m) + 3];
            // corrections land in the primed representation, so a corrected
            // single-MZM error leaves its excitation on gamma_d
            MajoranaOp corr = pauli_to_majorana({q, Pauli(m), Rep::RPrime}, code.layout);
            g.add_column(bits, p, std::move(corr));
            g.col_mech.emplace_back(q, Mechanism(m));
        }
    g.finalize();
    return g;
}

BpResult bp_decode(const DecoderGraph& graph, const BitVec& syndrome, const BpConfig& cfg) {
    if (int(syndrome.size()) != graph.n_rows)
        throw std::invalid_argument("bp_decode: syndrome length != rows");

    BpResult res;
    res.llr.resize(static_cast<std::size_t>(graph.n_cols));
    res.hard.assign(std::size_t(graph.n_cols), 0);
    for (int c = 0; c < graph.n_cols; ++c)
        res.llr[std::size_t(c)] = prior_llr(graph.prior[std::size_t(c)]);

    auto check_converged = [&]() {
        BitVec s(static_cast<std::size_t>(graph.n_rows));
        for (int c = 0; c < graph.n_cols; ++c)
            if (res.hard[std::size_t(c)]) s ^= graph.col_bits[std::size_t(c)];
        return s == syndrome;
    };

    // Tentative decision from priors alone (covers the zero syndrome).
    if (check_converged()) {
        res.converged = true;
        res.iters = 0;
        return res;
    }

    // Edge storage: per column, messages to each incident row and back.
    std::size_t n_edges = 0;
    for (const auto& rows : graph.col_rows) n_edges += rows.size();
    std::vector<double> v2c(n_edges), c2v(n_edges, 0.0);
    std::vector<std::size_t> col_edge_start(std::size_t(graph.n_cols) + 1, 0);
    for (int c = 0; c < graph.n_cols; ++c)
        col_edge_start[std::size_t(c) + 1] =
            col_edge_start[std::size_t(c)] + graph.col_rows[std::size_t(c)].size();
    // row -> list of edge ids
    std::vector<std::vector<std::size_t>> row_edges(static_cast<std::size_t>(graph.n_rows));
    for (int c = 0; c < graph.n_cols; ++c) {
        const auto& rows = graph.col_rows[std::size_t(c)];
        for (std::size_t k = 0; k < rows.size(); ++k)
            row_edges[std::size_t(rows[k])].push_back(col_edge_start[std::size_t(c)] + k);
    }
    for (int c = 0; c < graph.n_cols; ++c) {
        double l = prior_llr(graph.prior[std::size_t(c)]);
        for (std::size_t e = col_edge_start[std::size_t(c)]; e < col_edge_start[std::size_t(c) + 1]; ++e)
            v2c[e] = l;
    }

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        // check update: normalized min-sum with the syndrome sign
        for (int r = 0; r < graph.n_rows; ++r) {
            const auto& edges = row_edges[std::size_t(r)];
            double min1 = 1e300, min2 = 1e300;
            std::size_t arg1 = 0;
            int sign = syndrome.get(static_cast<std::size_t>(r)) ? -1 : 1;
            for (std::size_t e : edges) {
                double v = v2c[e];
                if (v < 0) sign = -sign;
                double a = std::fabs(v);
                if (a < min1) { min2 = min1; min1 = a; arg1 = e; }
                else if (a < min2) { min2 = a; }
            }
            for (std::size_t e : edges) {
                double mag = (e == arg1) ? min2 : min1;
                int s = sign;
                if (v2c[e] < 0) s = -s;
                c2v[e] = std::clamp(double(s) * cfg.alpha * mag, -kLlrClamp, kLlrClamp);
            }
        }
        // variable update
        for (int c = 0; c < graph.n_cols; ++c) {
            double total = prior_llr(graph.prior[std::size_t(c)]);
            for (std::size_t e = col_edge_start[std::size_t(c)]; e < col_edge_start[std::size_t(c) + 1]; ++e)
                total += c2v[e];
            res.llr[std::size_t(c)] = total;
            res.hard[std::size_t(c)] = total < 0.0 ? 1 : 0;
            for (std::size_t e = col_edge_start[std::size_t(c)]; e < col_edge_start[std::size_t(c) + 1]; ++e)
                v2c[e] = std::clamp(total - c2v[e], -kLlrClamp, kLlrClamp);
        }
        res.iters = iter;
        if (check_converged()) {
            res.converged = true;
            return res;
        }
    }
    return res;
}

namespace {

// Dense F2 solver state over the pivot columns, bit-packed by rows.
struct PivotSolve {
    std::vector<int> pivot_cols;          // graph column id per pivot, in pivot order
    std::vector<uint8_t> base_solution;   // x over pivots for rhs = syndrome
    std::vector<std::vector<uint8_t>> extra_solutions;  // per enumeration column
};

} // namespace

Decision osd_postprocess(const DecoderGraph& graph, const BpResult& bp,
                         const BitVec& syndrome, const OsdConfig& cfg) {
    if (int(bp.llr.size()) != graph.n_cols)
        throw std::invalid_argument("osd_postprocess: marginals size mismatch");

    Decision dec;
    dec.bp_converged = bp.converged;
    dec.bp_iters = bp.iters;

    // BP already satisfies the syndrome: keep its decision.
    if (bp.converged) {
        for (int c = 0; c < graph.n_cols; ++c)
            if (bp.hard[std::size_t(c)]) dec.cols.push_back(c);
        MajoranaOp corr = graph.col_op.empty() ? MajoranaOp() : MajoranaOp(graph.col_op[0].n_maj());
        for (int c : dec.cols) corr.support() ^= graph.col_op[std::size_t(c)].support();
        dec.correction = std::move(corr);
        return dec;
    }

    // Rank order: most error-suspicious first, ties by ascending index.
    std::vector<int> order(static_cast<std::size_t>(graph.n_cols));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return bp.llr[std::size_t(a)] < bp.llr[std::size_t(b)];
    });

    // Greedy pivot selection by Gaussian elimination over column vectors.
    F2Basis basis;
    std::vector<int> pivots, nonpivots;
    for (int c : order) {
        if (int(pivots.size()) < graph.n_rows && basis.add(graph.col_bits[std::size_t(c)]))
            pivots.push_back(c);
        else
            nonpivots.push_back(c);
    }
    if (int(pivots.size()) != graph.n_rows)
        throw std::runtime_error("osd_postprocess: check matrix is row-rank deficient");

    // Solve A x = rhs where A's columns are the pivot columns. One dense
    // elimination over [A | syndrome | enumeration columns].
    const int n = graph.n_rows;
    int n_extra = std::min({cfg.order, int(nonpivots.size()), 31});
    const int rhs_count = 1 + n_extra;
    const int total_cols = n + rhs_count;
    const int W = (total_cols + 63) / 64;
    std::vector<uint64_t> M(std::size_t(n) * std::size_t(W), 0);
    auto set_bit = [&](int r, int c) { M[std::size_t(r) * W + c / 64] |= uint64_t(1) << (c % 64); };
    auto get_bit = [&](int r, int c) {
        return (M[std::size_t(r) * W + c / 64] >> (c % 64)) & 1;
    };
    for (int j = 0; j < n; ++j)
        for (std::size_t r : graph.col_bits[std::size_t(pivots[std::size_t(j)])].ones())
            set_bit(int(r), j);
    for (std::size_t r : syndrome.ones()) set_bit(int(r), n);
    for (int e = 0; e < n_extra; ++e)
        for (std::size_t r : graph.col_bits[std::size_t(nonpivots[std::size_t(e)])].ones())
            set_bit(int(r), n + 1 + e);

    // forward elimination with partial pivoting on columns 0..n-1
    std::vector<int> where(std::size_t(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int r = row; r < n; ++r)
            if (get_bit(r, col)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int w = 0; w < W; ++w)
                std::swap(M[std::size_t(sel) * W + w], M[std::size_t(row) * W + w]);
        for (int r = 0; r < n; ++r)
            if (r != row && get_bit(r, col))
                for (int w = 0; w < W; ++w)
                    M[std::size_t(r) * W + w] ^= M[std::size_t(row) * W + w];
        where[std::size_t(col)] = row;
        ++row;
    }
    // pivot columns are independent, so every column got a pivot row
    for (int col = 0; col < n; ++col)
        if (where[std::size_t(col)] < 0)
            throw std::runtime_error("osd_postprocess: elimination lost a pivot");

    auto solution_for = [&](int rhs_index) {
        std::vector<uint8_t> x(std::size_t(n), 0);
        for (int col = 0; col < n; ++col)
            x[std::size_t(col)] = uint8_t(get_bit(where[std::size_t(col)], n + rhs_index));
        return x;
    };
    std::vector<uint8_t> x0 = solution_for(0);
    std::vector<std::vector<uint8_t>> xe;
    for (int e = 0; e < n_extra; ++e) xe.push_back(solution_for(1 + e));

    // soft weight of a solution: sum of posterior llrs over chosen columns
    auto weight_of = [&](const std::vector<uint8_t>& x, uint32_t mask) {
        double w = 0.0;
        for (int j = 0; j < n; ++j)
            if (x[std::size_t(j)]) w += bp.llr[std::size_t(pivots[std::size_t(j)])];
        for (int e = 0; e < n_extra; ++e)
            if ((mask >> e) & 1) w += bp.llr[std::size_t(nonpivots[std::size_t(e)])];
        return w;
    };

    std::vector<uint8_t> best = x0;
    uint32_t best_mask = 0;
    double best_w = weight_of(x0, 0);
    if (n_extra > 0) {
        std::vector<uint8_t> cur = x0;
        uint32_t mask = 0;
        // gray-code walk over the 2^n_extra assignments
        for (uint32_t g = 1; g < (uint32_t(1) << n_extra); ++g) {
            uint32_t gray = g ^ (g >> 1);
            uint32_t prev = (g - 1) ^ ((g - 1) >> 1);
            int bit = int(std::countr_zero(gray ^ prev));
            mask = gray;
            for (int j = 0; j < n; ++j) cur[std::size_t(j)] ^= xe[std::size_t(bit)][std::size_t(j)];
            double w = weight_of(cur, mask);
            if (w < best_w) { best_w = w; best = cur; best_mask = mask; }
        }
    }

    for (int j = 0; j < n; ++j)
        if (best[std::size_t(j)]) dec.cols.push_back(pivots[std::size_t(j)]);
    for (int e = 0; e < n_extra; ++e)
        if ((best_mask >> e) & 1) dec.cols.push_back(nonpivots[std::size_t(e)]);
    std::sort(dec.cols.begin(), dec.cols.end());

    MajoranaOp corr = graph.col_op.empty() ? MajoranaOp() : MajoranaOp(graph.col_op[0].n_maj());
    for (int c : dec.cols) corr.support() ^= graph.col_op[std::size_t(c)].support();
    dec.correction = std::move(corr);
    return dec;
}

Decision decode(const DecoderGraph& graph, const BitVec& syndrome,
                const BpConfig& bp_cfg, const OsdConfig& osd_cfg) {
    BpResult bp = bp_decode(graph, syndrome, bp_cfg);
    Decision dec = osd_postprocess(graph, bp, syndrome, osd_cfg);
    return dec;
}

bool is_logical_failure(const FermionCode& code, const MajoranaOp& error,
                        const MajoranaOp& correction) {
    if (code.syndrome(error) != code.syndrome(correction))
        throw std::invalid_argument("is_logical_failure: correction does not match syndrome");
    MajoranaOp residual = multiply(error, correction);
    return !code.in_stabilizer_group(residual);
}

} // namespace tetracode
