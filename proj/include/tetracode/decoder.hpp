#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetracode/bitvec.hpp"
#include "tetracode/fermion.hpp"
#include "tetracode/noise.hpp"

namespace tetracode {

/// Binary check matrix with per-column priors and realized correction ops.
/// Rows are parity checks (generators or detectors); columns are error
/// mechanisms. Column c as a vector over rows is col_bits[c].
struct DecoderGraph {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<std::vector<int>> row_cols;  // sparse rows
    std::vector<std::vector<int>> col_rows;  // sparse columns
    std::vector<BitVec> col_bits;            // column of H over rows
    std::vector<double> prior;               // error probability per column
    std::vector<MajoranaOp> col_op;          // data-space effect (identity for flips)

    // provenance for mechanism graphs: (tetron, mechanism) per column and
    // the generator index behind each row
    std::vector<std::pair<int, Mechanism>> col_mech;
    std::vector<int> row_gen;

    void add_column(const BitVec& rows_hit, double p, MajoranaOp op);
    void finalize();  // fills row_cols/col_rows from col_bits

    /// XOR of the columns in `cols`.
    BitVec syndrome_of_columns(const std::vector<int>& cols) const;
};

/// Full mechanism graph: one row per fermionic generator, seven columns per
/// tetron, priors from channel_probs(model).
DecoderGraph build_decoder_graph(const FermionCode& code, const NoiseModel& model);

/// Baseline bosonic graph: set-0 rows only, three Pauli columns per tetron.
/// Each Pauli column's prior absorbs the rate of its aliased single-MZM
/// mechanism (gamma_a reads as X, gamma_b as Y, gamma_c as Z).
DecoderGraph build_bosonic_decoder_graph(const FermionCode& code, const NoiseModel& model);

struct BpConfig {
    int max_iters = 30;
    double alpha = 0.625;  // min-sum normalization
};

struct BpResult {
    std::vector<double> llr;      // posterior log((1-p)/p) per column
    std::vector<uint8_t> hard;    // tentative decision
    bool converged = false;
    int iters = 0;
};

/// Syndrome belief propagation: parallel (flooding) normalized min-sum.
BpResult bp_decode(const DecoderGraph& graph, const BitVec& syndrome, const BpConfig& cfg = {});

struct OsdConfig {
    int order = 0;   // 0: OSD-0; > 0: exhaustive re-encoding over `order` columns
};

struct Decision {
    std::vector<int> cols;       // chosen columns, ascending
    MajoranaOp correction;       // XOR of chosen column ops
    bool bp_converged = false;
    int bp_iters = 0;
};

/// Ordered-statistics post-processing. Columns are ranked by BP reliability
/// (ties by ascending index); Gaussian elimination selects a full-row-rank
/// pivot set; the syndrome is solved exactly on it. With order E > 0, all
/// 2^E assignments of the E most-suspicious non-pivot columns are re-encoded
/// and the lowest-soft-weight solution wins.
Decision osd_postprocess(const DecoderGraph& graph, const BpResult& bp,
                         const BitVec& syndrome, const OsdConfig& cfg = {});

/// bp_decode followed by osd_postprocess. The returned correction always
/// reproduces the syndrome.
Decision decode(const DecoderGraph& graph, const BitVec& syndrome,
                const BpConfig& bp_cfg = {}, const OsdConfig& osd_cfg = {});

/// Residual membership test. Requires syndrome(error) == syndrome(correction).
bool is_logical_failure(const FermionCode& code, const MajoranaOp& error,
                        const MajoranaOp& correction);

} // namespace tetracode
