#include "tetracode/ft.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace tetracode {

int FtSequence::n_measurements() const {
    int total = 0;
    for (const auto& s : steps) total += int(s.size());
    return total;
}

uint64_t FtSequence::content_hash() const {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(uint64_t(data_steps_per_round));
    for (const auto& step : steps) {
        mix(0x5354455055ULL);  // step boundary marker
        for (const auto& m : step)
            for (uint64_t w : m.op.support().words()) mix(w);
    }
    return h;
}

FtSequence default_ft_sequence(const FermionCode& code, int repetitions, uint64_t seed) {
    Schedule sched = schedule(code, ScheduleStrategy::PhasedGreedy, seed);
    FtSequence seq;
    seq.name = "schedule-x" + std::to_string(repetitions);
    seq.data_steps_per_round = sched.latency();
    for (int rep = 0; rep < repetitions; ++rep)
        for (const auto& round : sched.rounds) {
            std::vector<MeasurementSpec> step;
            for (int g : round.gens) {
                const auto& gen = code.generators[std::size_t(g)];
                step.push_back({gen.label, gen.terms, gen.op});
            }
            seq.steps.push_back(std::move(step));
        }
    return seq;
}

void validate_ft_sequence(const FermionCode& code, const FtSequence& seq) {
    if (seq.steps.empty()) throw std::invalid_argument("ft sequence: no steps");
    if (seq.data_steps_per_round < 1)
        throw std::invalid_argument("ft sequence: data_steps_per_round must be >= 1");
    F2Basis span;
    for (const auto& step : seq.steps) {
        std::vector<const MajoranaOp*> seen;
        for (const auto& m : step) {
            if (!m.op.even_weight() || m.op.identity())
                throw std::invalid_argument("ft sequence: " + m.label +
                                            " is not a nonempty even-weight operator");
            for (int q = 1; q <= code.n_tetrons(); ++q) {
                int onq = 0;
                for (int b = 4 * (q - 1); b < 4 * q; ++b)
                    if (m.op.has(b)) ++onq;
                if (onq != 0 && onq != 2)
                    throw std::invalid_argument("ft sequence: " + m.label + " spans " +
                                                std::to_string(onq) + " MZMs on tetron " +
                                                std::to_string(q));
            }
            if (!code.in_stabilizer_group(m.op))
                throw std::invalid_argument("ft sequence: " + m.label +
                                            " is outside the stabilizer group");
            for (const auto* other : seen)
                if (*other == m.op)
                    throw std::invalid_argument("ft sequence: operator measured twice in one step");
            seen.push_back(&m.op);
            span.add(m.op.support());
        }
    }
    int want = 2 * code.n_tetrons() - code.k;
    if (int(span.rank()) != want)
        throw std::invalid_argument("ft sequence: measured operators span rank " +
                                    std::to_string(span.rank()) + ", need " +
                                    std::to_string(want));
}

std::string ft_sequence_to_json(const FtSequence& seq) {
    nlohmann::ordered_json j;
    j["format"] = "tetracode-sequence-v1";
    j["name"] = seq.name;
    j["data_steps_per_round"] = seq.data_steps_per_round;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& step : seq.steps) {
        nlohmann::ordered_json js = nlohmann::ordered_json::array();
        for (const auto& m : step) {
            nlohmann::ordered_json jm;
            jm["label"] = m.label;
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& t : m.terms) {
                nlohmann::ordered_json jt;
                jt["tetron"] = t.tetron;
                jt["pauli"] = std::string(1, pauli_char(t.pauli));
                jt["rep"] = t.rep == Rep::R ? "R" : "R'";
                terms.push_back(jt);
            }
            jm["pauli_terms"] = terms;
            js.push_back(jm);
        }
        steps.push_back(js);
    }
    j["steps"] = steps;
    return j.dump(2) + "\n";
}

FtSequence ft_sequence_from_json(const FermionCode& code, const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (j.value("format", "") != "tetracode-sequence-v1")
        throw std::runtime_error("sequence file: unknown format tag");
    FtSequence seq;
    seq.name = j.value("name", "sequence");
    seq.data_steps_per_round = j.at("data_steps_per_round").get<int>();
    for (const auto& js : j.at("steps")) {
        std::vector<MeasurementSpec> step;
        for (const auto& jm : js) {
            MeasurementSpec m;
            m.label = jm.at("label").get<std::string>();
            for (const auto& jt : jm.at("pauli_terms")) {
                PauliTerm t;
                t.tetron = jt.at("tetron").get<int>();
                t.pauli = pauli_from_char(jt.at("pauli").get<std::string>().at(0));
                std::string rep = jt.at("rep").get<std::string>();
                t.rep = rep == "R'" ? Rep::RPrime : Rep::R;
                m.terms.push_back(t);
            }
            m.op = pauli_string_to_majorana(m.terms, code.layout);
            step.push_back(std::move(m));
        }
        seq.steps.push_back(std::move(step));
    }
    return seq;
}

FtGraph build_ft_graph(const FermionCode& code, const FtSequence& seq,
                       const NoiseModel& model) {
    validate_ft_sequence(code, seq);
    FtGraph fg;
    const int n = code.n_tetrons();
    const int S = seq.n_steps();

    // chains of repeated measurements, keyed by operator support
    std::map<std::vector<uint64_t>, int> chain_of;
    for (int s = 0; s < S; ++s)
        for (const auto& m : seq.steps[std::size_t(s)]) {
            auto key = m.op.support().words();
            auto [it, fresh] = chain_of.emplace(key, int(fg.chain_op.size()));
            if (fresh) {
                fg.chain_op.push_back(m.op);
                fg.chain_events.emplace_back();
            }
            int ev = fg.n_events++;
            fg.chain_events[std::size_t(it->second)].push_back(ev);
            fg.event_step.push_back(s + 1);
            fg.event_chain.push_back(it->second);
        }

    int n_rows = 0;
    for (const auto& evs : fg.chain_events) {
        fg.chain_detector_start.push_back(n_rows);
        n_rows += int(evs.size()) + 1;
    }
    fg.graph.n_rows = n_rows;
    fg.n_data_cols = S * n * kNumMechanisms;

    ChannelProbs probs = channel_probs(model);
    double L = double(seq.data_steps_per_round);

    // data columns: epoch e hits, per anticommuting chain, the detector whose
    // step interval contains e
    for (int e = 1; e <= S; ++e)
        for (int q = 1; q <= n; ++q)
            for (int m = 0; m < kNumMechanisms; ++m) {
                MajoranaOp op = mechanism_op(q, Mechanism(m), code.layout);
                BitVec rows(static_cast<std::size_t>(n_rows));
                for (std::size_t c = 0; c < fg.chain_op.size(); ++c) {
                    if (commutes(op, fg.chain_op[c])) continue;
                    const auto& evs = fg.chain_events[c];
                    int det = int(evs.size());  // final detector unless an event catches it
                    for (std::size_t i = 0; i < evs.size(); ++i)
                        if (e <= fg.event_step[std::size_t(evs[i])]) { det = int(i); break; }
                    rows.set(std::size_t(fg.chain_detector_start[c] + det));
                }
                fg.graph.add_column(rows, probs.mech[std::size_t(m)] / L, std::move(op));
                fg.graph.col_mech.emplace_back(q, Mechanism(m));
            }
    // flip columns: event j of a chain separates detectors j and j+1
    for (int ev = 0; ev < fg.n_events; ++ev) {
        int c = fg.event_chain[std::size_t(ev)];
        const auto& evs = fg.chain_events[std::size_t(c)];
        int j = 0;
        while (evs[std::size_t(j)] != ev) ++j;
        BitVec rows(static_cast<std::size_t>(n_rows));
        rows.set(std::size_t(fg.chain_detector_start[std::size_t(c)] + j));
        rows.set(std::size_t(fg.chain_detector_start[std::size_t(c)] + j + 1));
        fg.graph.add_column(rows, model.p, MajoranaOp(code.n_maj()));
        fg.graph.col_mech.emplace_back(0, Mechanism::PX);  // placeholder provenance
    }
    fg.graph.finalize();
    return fg;
}

namespace {

// Detector values for a full trial given event outcomes and the final error.
void fill_detectors(const FtGraph& fg, const MajoranaOp& final_error,
                    const std::vector<uint8_t>& event_bits, BitVec& out) {
    out.clear();
    for (std::size_t c = 0; c < fg.chain_op.size(); ++c) {
        const auto& evs = fg.chain_events[c];
        int base = fg.chain_detector_start[c];
        uint8_t prev = 0;
        for (std::size_t j = 0; j < evs.size(); ++j) {
            uint8_t cur = event_bits[std::size_t(evs[j])];
            if (prev ^ cur) out.set(std::size_t(base + int(j)));
            prev = cur;
        }
        uint8_t perfect =
            final_error.support().overlap_parity(fg.chain_op[c].support()) ? 1 : 0;
        if (prev ^ perfect) out.set(std::size_t(base + int(evs.size())));
    }
}

uint64_t ft_worker(const FermionCode& code, const FtSequence& seq, const FtGraph& fg,
                   const NoiseModel& model, const SimConfig& cfg, uint64_t stream_base,
                   uint64_t t0, uint64_t t1) {
    const int n = code.n_tetrons();
    ChannelProbs step_probs = channel_probs(model);
    for (auto& v : step_probs.mech) v /= double(seq.data_steps_per_round);
    uint64_t failures = 0;
    std::vector<uint8_t> event_bits(static_cast<std::size_t>(fg.n_events));
    BitVec detectors(static_cast<std::size_t>(fg.graph.n_rows));
    for (uint64_t t = t0; t < t1; ++t) {
        RngStream rng(cfg.seed, stream_base + t);
        MajoranaOp acc(code.n_maj());
        bool any_noise = false;
        int ev = 0;
        for (int s = 0; s < seq.n_steps(); ++s) {
            for (int q = 1; q <= n; ++q) {
                double u = rng.next_double();
                double cum = 0.0;
                for (int m = 0; m < kNumMechanisms; ++m) {
                    cum += step_probs.mech[std::size_t(m)];
                    if (u < cum) {
                        acc.support() ^= mechanism_op(q, Mechanism(m), code.layout).support();
                        any_noise = true;
                        break;
                    }
                }
            }
            for (std::size_t i = 0; i < seq.steps[std::size_t(s)].size(); ++i, ++ev) {
                const auto& op = fg.chain_op[std::size_t(fg.event_chain[std::size_t(ev)])];
                uint8_t bit = acc.support().overlap_parity(op.support()) ? 1 : 0;
                if (rng.next_double() < model.p) {
                    bit ^= 1;
                    any_noise = true;
                }
                event_bits[std::size_t(ev)] = bit;
            }
        }
        if (!any_noise) continue;
        fill_detectors(fg, acc, event_bits, detectors);
        if (!detectors.any()) {
            if (!code.in_stabilizer_group(acc)) ++failures;
            continue;
        }
        Decision dec = decode(fg.graph, detectors, cfg.bp, cfg.osd);
        MajoranaOp residual = multiply(acc, dec.correction);
        if (!code.in_stabilizer_group(residual)) ++failures;
    }
    return failures;
}

} // namespace

std::vector<CapacityPoint> run_ft(const FermionCode& code, const FtSequence& seq,
                                  const std::vector<NoiseModel>& grid, const SimConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("run_ft: trials = 0");
    std::vector<CapacityPoint> out;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const NoiseModel& model = grid[gi];
        FtGraph fg = build_ft_graph(code, seq, model);
        uint64_t stream_base = uint64_t(gi) << 40;

        int w = std::max(1, cfg.workers);
        uint64_t failures = 0;
        if (w == 1 || cfg.trials < 2 * uint64_t(w)) {
            failures = ft_worker(code, seq, fg, model, cfg, stream_base, 0, cfg.trials);
        } else {
            std::vector<uint64_t> counts(std::size_t(w), 0);
            std::vector<std::thread> threads;
            uint64_t chunk = (cfg.trials + uint64_t(w) - 1) / uint64_t(w);
            for (int i = 0; i < w; ++i) {
                uint64_t lo = uint64_t(i) * chunk;
                uint64_t hi = std::min(cfg.trials, lo + chunk);
                if (lo >= hi) break;
                threads.emplace_back([&, i, lo, hi]() {
                    counts[std::size_t(i)] =
                        ft_worker(code, seq, fg, model, cfg, stream_base, lo, hi);
                });
            }
            for (auto& th : threads) th.join();
            for (uint64_t c : counts) failures += c;
        }

        CapacityPoint pt;
        pt.family = code.base.family;
        pt.n_tetrons = code.n_tetrons();
        pt.eta = model.eta;
        pt.p = model.p;
        pt.p_physical = physical_error_rate(model);
        pt.trials = cfg.trials;
        pt.failures = failures;
        pt.p_logical = double(failures) / double(cfg.trials);
        Interval ci = wilson_interval(failures, cfg.trials);
        pt.ci_low = ci.lo;
        pt.ci_high = ci.hi;
        pt.seed = cfg.seed;
        out.push_back(pt);
    }
    return out;
}

InjectReport inject_single_faults(const FermionCode& code, const FtSequence& seq,
                                  const NoiseModel& model, const BpConfig& bp,
                                  const OsdConfig& osd) {
    FtGraph fg = build_ft_graph(code, seq, model);
    InjectReport rep;
    auto run_case = [&](int col, const MajoranaOp& error, const std::string& desc) {
        ++rep.cases;
        const BitVec& detectors = fg.graph.col_bits[std::size_t(col)];
        MajoranaOp residual = error;
        if (detectors.any()) {
            Decision dec = decode(fg.graph, detectors, bp, osd);
            residual = multiply(error, dec.correction);
        }
        if (!code.in_stabilizer_group(residual)) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = desc;
        }
    };
    const int n = code.n_tetrons();
    for (int e = 1; e <= seq.n_steps(); ++e)
        for (int q = 1; q <= n; ++q)
            for (int m = 0; m < kNumMechanisms; ++m) {
                int col = fg.data_col(e, q, m, n);
                run_case(col, mechanism_op(q, Mechanism(m), code.layout),
                         std::string(mechanism_name(Mechanism(m))) + " on tetron " +
                             std::to_string(q) + " before step " + std::to_string(e));
            }
    for (int ev = 0; ev < fg.n_events; ++ev)
        run_case(fg.n_data_cols + ev, MajoranaOp(code.n_maj()),
                 "measurement flip at event " + std::to_string(ev + 1) + " (step " +
                     std::to_string(fg.event_step[std::size_t(ev)]) + ")");
    return rep;
}

} // namespace tetracode
