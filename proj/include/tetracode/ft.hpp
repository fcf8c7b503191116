#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetracode/decoder.hpp"
#include "tetracode/scheduler.hpp"
#include "tetracode/sim.hpp"

namespace tetracode {

/// One measured stabilizer: a valid two-MZM-per-tetron operator from the
/// stabilizer group, given as Pauli-with-rep terms.
struct MeasurementSpec {
    std::string label;
    std::vector<PauliTerm> terms;
    MajoranaOp op;
};

/// Ordered measurement steps; the measurements inside one step run in
/// parallel. data_steps_per_round scales the per-step data noise so one
/// extraction round accumulates the full (p, eta) budget.
struct FtSequence {
    std::string name;
    std::vector<std::vector<MeasurementSpec>> steps;
    int data_steps_per_round = 1;

    int n_steps() const { return int(steps.size()); }
    int n_measurements() const;
    uint64_t content_hash() const;
};

/// Schedule-ordered full syndrome extraction repeated `repetitions` times.
FtSequence default_ft_sequence(const FermionCode& code, int repetitions = 3,
                               uint64_t seed = 12345);

/// Throws when a measurement is not a valid tetron measurement (even weight,
/// 0 or 2 MZMs per tetron), is outside the stabilizer group, repeats within a
/// step, or when the measured set does not span the full stabilizer rank.
void validate_ft_sequence(const FermionCode& code, const FtSequence& seq);

std::string ft_sequence_to_json(const FtSequence& seq);
FtSequence ft_sequence_from_json(const FermionCode& code, const std::string& text);

/// Detector decoding graph for a sequence. Rows are detectors: the first
/// extraction of each distinct operator, XORs of consecutive extractions,
/// and a final detector against a perfect extraction. Columns are data
/// mechanisms per (step, tetron) plus one outcome-flip column per
/// measurement event.
struct FtGraph {
    DecoderGraph graph;
    std::vector<MajoranaOp> chain_op;             // distinct measured operators
    std::vector<std::vector<int>> chain_events;   // event ids per chain, time order
    std::vector<int> event_step;                  // 1-based step of each event
    std::vector<int> event_chain;
    std::vector<int> chain_detector_start;        // row offset per chain
    int n_events = 0;
    int n_data_cols = 0;  // flip column e lives at n_data_cols + e

    int data_col(int step, int tetron, int mech, int n_tetrons) const {
        return ((step - 1) * n_tetrons + (tetron - 1)) * kNumMechanisms + mech;
    }
};

FtGraph build_ft_graph(const FermionCode& code, const FtSequence& seq,
                       const NoiseModel& model);

/// Phenomenological run: per-step data mechanisms at rates
/// channel_probs(p, eta)/L, each measurement outcome flipped with
/// probability p, detector decoding with a final perfect round.
std::vector<CapacityPoint> run_ft(const FermionCode& code, const FtSequence& seq,
                                  const std::vector<NoiseModel>& grid, const SimConfig& cfg);

struct InjectReport {
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::string first_failure;

    bool pass() const { return failures == 0; }
};

/// Exhaustive single-fault injection: every data mechanism at every (step,
/// tetron) and every single measurement-outcome flip, decoded noise-free.
InjectReport inject_single_faults(const FermionCode& code, const FtSequence& seq,
                                  const NoiseModel& model = NoiseModel(0.01, 1.0),
                                  const BpConfig& bp = {}, const OsdConfig& osd = {});

} // namespace tetracode
