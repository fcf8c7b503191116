#include "tetracode/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace tetracode {

Interval wilson_interval(uint64_t failures, uint64_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials = 0");
    double n = double(trials);
    double phat = double(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    if (failures == 0) ci.lo = 0.0;          // the endpoints are exact there
    if (failures == trials) ci.hi = 1.0;
    return ci;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (lo <= 0 || hi <= 0 || n < 1) throw std::invalid_argument("log_grid: bad range");
    std::vector<double> out;
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        out.push_back(std::exp(la + (lb - la) * double(i) / double(n - 1)));
    return out;
}

namespace {

// Worker body shared by the capacity runs: returns the failure count over
// the trial range [t0, t1).
uint64_t capacity_worker(const FermionCode& code, const DecoderGraph& graph,
                         const ChannelProbs& probs, const SimConfig& cfg,
                         uint64_t stream_base, uint64_t t0, uint64_t t1) {
    uint64_t failures = 0;
    ErrorSample sample;
    BitVec syndrome(static_cast<std::size_t>(graph.n_rows));
    for (uint64_t t = t0; t < t1; ++t) {
        RngStream rng(cfg.seed, stream_base + t);
        sample_error_into(probs, code.layout, rng, sample);
        bool trivial = true;
        syndrome.clear();
        for (int q = 0; q < code.n_tetrons(); ++q) {
            int8_t m = sample.labels[std::size_t(q)];
            if (m < 0) continue;
            trivial = false;
            syndrome ^= graph.col_bits[std::size_t(q * kNumMechanisms + m)];
        }
        if (trivial) continue;
        if (!syndrome.any()) {
            if (!code.in_stabilizer_group(sample.op)) ++failures;
            continue;
        }
        Decision dec = decode(graph, syndrome, cfg.bp, cfg.osd);
        MajoranaOp residual = multiply(sample.op, dec.correction);
        if (!code.in_stabilizer_group(residual)) ++failures;
    }
    return failures;
}

uint64_t run_sharded(int workers, uint64_t trials,
                     const std::function<uint64_t(uint64_t, uint64_t)>& body) {
    int w = std::max(1, workers);
    if (w == 1 || trials < 2 * uint64_t(w)) return body(0, trials);
    std::vector<uint64_t> counts(std::size_t(w), 0);
    std::vector<std::thread> threads;
    uint64_t chunk = (trials + uint64_t(w) - 1) / uint64_t(w);
    for (int i = 0; i < w; ++i) {
        uint64_t lo = uint64_t(i) * chunk;
        uint64_t hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, i, lo, hi]() { counts[std::size_t(i)] = body(lo, hi); });
    }
    for (auto& th : threads) th.join();
    uint64_t total = 0;
    for (uint64_t c : counts) total += c;
    return total;
}

} // namespace

std::vector<CapacityPoint> run_capacity(const FermionCode& code,
                                        const std::vector<NoiseModel>& grid,
                                        const SimConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("run_capacity: trials = 0");
    std::vector<CapacityPoint> out;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const NoiseModel& model = grid[gi];
        DecoderGraph graph = build_decoder_graph(code, model);
        ChannelProbs probs = channel_probs(model);
        uint64_t stream_base = uint64_t(gi) << 40;
        uint64_t failures = run_sharded(
            cfg.workers, cfg.trials, [&](uint64_t lo, uint64_t hi) {
                return capacity_worker(code, graph, probs, cfg, stream_base, lo, hi);
            });
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

PseudothresholdEstimate pseudothreshold(const std::vector<CapacityPoint>& points) {
    PseudothresholdEstimate est;
    if (points.empty()) return est;
    est.eta = points.front().eta;
    std::vector<CapacityPoint> pts = points;
    std::sort(pts.begin(), pts.end(),
              [](const CapacityPoint& a, const CapacityPoint& b) { return a.p < b.p; });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[i + 1];
        if (a.failures == 0 || b.failures == 0) continue;
        double ga = std::log(a.p_logical) - std::log(a.p_physical);
        double gb = std::log(b.p_logical) - std::log(b.p_physical);
        if (ga < 0.0 && gb >= 0.0) {
            double t = -ga / (gb - ga);
            est.found = true;
            est.bracket_lo = int(i);
            est.bracket_hi = int(i + 1);
            est.p_star_physical = std::exp(std::log(a.p_physical) +
                                           t * (std::log(b.p_physical) - std::log(a.p_physical)));
            est.p_star_total = std::exp(std::log(a.p) + t * (std::log(b.p) - std::log(a.p)));
            return est;
        }
    }
    return est;
}

std::pair<double, int> loglog_slope(const std::vector<CapacityPoint>& points,
                                    uint64_t min_failures) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& pt : points) {
        if (pt.failures < min_failures) continue;
        double x = std::log(pt.p);
        double y = std::log(pt.p_logical);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return {0.0, n};
    double slope = (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
    return {slope, n};
}

int tetron_pauli_class(const MajoranaOp& op, int tetron) {
    int bits = 0;
    for (int i = 0; i < 4; ++i)
        if (op.has(4 * (tetron - 1) + i)) bits |= 1 << i;
    bits &= 7;                                    // gamma_d is the reservoir
    if (std::popcount(unsigned(bits)) & 1) bits ^= 7;  // mod the tetron operator
    switch (bits) {
        case 0: return -1;
        case 6: return int(Mechanism::PX);  // {b, c}
        case 5: return int(Mechanism::PY);  // {a, c}
        case 3: return int(Mechanism::PZ);  // {a, b}
    }
    throw std::logic_error("tetron_pauli_class: unreachable");
}

namespace {

// Symplectic span of the base code generators, for qubit-level membership.
F2Basis base_symplectic_basis(const BosonicCode& base) {
    F2Basis basis;
    for (const auto& g : base.generators) {
        BitVec v(std::size_t(2 * base.n));
        for (const auto& t : g.terms) {
            if (t.pauli != Pauli::Z) v.set(std::size_t(t.qubit - 1));
            if (t.pauli != Pauli::X) v.set(std::size_t(base.n + t.qubit - 1));
        }
        basis.add(v);
    }
    return basis;
}

bool qubit_residual_is_logical(const FermionCode& code, const F2Basis& base_basis,
                               const MajoranaOp& residual) {
    BitVec v(std::size_t(2 * code.base.n));
    for (int q = 1; q <= code.n_tetrons(); ++q) {
        int cls = tetron_pauli_class(residual, q);
        if (cls < 0) continue;
        Pauli pl = Pauli(cls);
        if (pl != Pauli::Z) v.set(std::size_t(q - 1));
        if (pl != Pauli::X) v.set(std::size_t(code.base.n + q - 1));
    }
    if (!v.any()) return false;
    return !base_basis.contains(v);
}

} // namespace

BaselineReport run_baseline_reservoir(const FermionCode& code, const NoiseModel& model,
                                      uint64_t trials, uint64_t seed, int workers,
                                      const BpConfig& bp, const OsdConfig& osd) {
    DecoderGraph graph = build_bosonic_decoder_graph(code, model);
    ChannelProbs probs = channel_probs(model);
    F2Basis base_basis = base_symplectic_basis(code.base);
    int t_b = (code.base.d_b - 1) / 2;

    struct Partial {
        uint64_t clean = 0, fail = 0, within = 0, within_fail = 0, beyond = 0, beyond_fail = 0;
    };
    int w = std::max(1, workers);
    std::vector<Partial> parts(static_cast<std::size_t>(w));
    auto body = [&](int widx, uint64_t t0, uint64_t t1) {
        Partial& acc = parts[std::size_t(widx)];
        ErrorSample sample;
        BitVec syndrome(static_cast<std::size_t>(graph.n_rows));
        for (uint64_t t = t0; t < t1; ++t) {
            RngStream rng(seed, t);
            sample_error_into(probs, code.layout, rng, sample);
            int visible = 0;
            syndrome.clear();
            for (int q = 0; q < code.n_tetrons(); ++q) {
                int8_t m = sample.labels[std::size_t(q)];
                if (m < 0 || Mechanism(m) == Mechanism::GD) continue;
                ++visible;
                // fermionic mechanisms alias their Pauli column on set-0 rows
                int col = q * 3 + (m < 3 ? m : m - 3);
                syndrome ^= graph.col_bits[std::size_t(col)];
            }
            MajoranaOp residual = sample.op;
            if (syndrome.any()) {
                Decision dec = decode(graph, syndrome, bp, osd);
                residual = multiply(sample.op, dec.correction);
            }
            bool clean = true;
            for (int q = 1; q <= code.n_tetrons(); ++q)
                if (tetron_pauli_class(residual, q) >= 0) { clean = false; break; }
            bool failed = !clean && qubit_residual_is_logical(code, base_basis, residual);
            if (clean) ++acc.clean;
            if (failed) ++acc.fail;
            if (visible <= t_b) {
                ++acc.within;
                if (failed) ++acc.within_fail;
            } else {
                ++acc.beyond;
                if (failed) ++acc.beyond_fail;
            }
        }
    };

    if (w == 1 || trials < 2 * uint64_t(w)) {
        body(0, 0, trials);
    } else {
        std::vector<std::thread> threads;
        uint64_t chunk = (trials + uint64_t(w) - 1) / uint64_t(w);
        for (int i = 0; i < w; ++i) {
            uint64_t lo = uint64_t(i) * chunk;
            uint64_t hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back([&, i, lo, hi]() { body(i, lo, hi); });
        }
        for (auto& th : threads) th.join();
    }

    BaselineReport rep;
    rep.trials = trials;
    for (const auto& p : parts) {
        rep.reservoir_clean += p.clean;
        rep.bosonic_failures += p.fail;
        rep.within_capacity += p.within;
        rep.within_capacity_failures += p.within_fail;
        rep.beyond_capacity += p.beyond;
        rep.beyond_capacity_failures += p.beyond_fail;
    }
    return rep;
}

ExhaustiveCheck baseline_single_mzm_exhaustive(const FermionCode& code) {
    NoiseModel model(0.01, 1.0);
    DecoderGraph graph = build_bosonic_decoder_graph(code, model);
    for (int q = 1; q <= code.n_tetrons(); ++q) {
        for (Mzm x : {Mzm::A, Mzm::B, Mzm::C, Mzm::D}) {
            MajoranaOp error(code.n_maj());
            error.flip(code.layout.mzm_index(q, x));
            BitVec syndrome(static_cast<std::size_t>(graph.n_rows));
            for (int r = 0; r < graph.n_rows; ++r)
                if (!commutes(error, code.generators[std::size_t(graph.row_gen[std::size_t(r)])].op))
                    syndrome.set(static_cast<std::size_t>(r));
            if (x == Mzm::D) {
                if (syndrome.any())
                    return {false, "gamma_d on tetron " + std::to_string(q) +
                                       " has a visible set-0 syndrome"};
                continue;
            }
            Decision dec = decode(graph, syndrome);
            MajoranaOp residual = multiply(error, dec.correction);
            // expect exactly gamma_d on the same tetron
            MajoranaOp expect(code.n_maj());
            expect.flip(code.layout.mzm_index(q, Mzm::D));
            if (residual != expect)
                return {false, "gamma_" + std::string(1, mzm_char(x)) + " on tetron " +
                                   std::to_string(q) + " left residual " + residual.str()};
        }
    }
    return {};
}

std::string capacity_csv(const std::vector<CapacityPoint>& points) {
    std::string out = "family,n_tetrons,eta,p,p_physical,trials,failures,p_logical,ci_low,ci_high,seed\n";
    char buf[512];
    for (const auto& pt : points) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.10g,%.10g,%.10g,%llu,%llu,%.10g,%.10g,%.10g,%llu\n",
                      pt.family.c_str(), pt.n_tetrons, pt.eta, pt.p, pt.p_physical,
                      (unsigned long long)pt.trials, (unsigned long long)pt.failures,
                      pt.p_logical, pt.ci_low, pt.ci_high, (unsigned long long)pt.seed);
        out += buf;
    }
    return out;
}

std::string capacity_report_json(const std::vector<CapacityPoint>& points,
                                 const std::vector<std::pair<std::string, std::string>>& metadata) {
    nlohmann::ordered_json j;
    j["format"] = "tetracode-report-v1";
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = meta;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& pt : points) {
        nlohmann::ordered_json jp;
        jp["family"] = pt.family;
        jp["n_tetrons"] = pt.n_tetrons;
        jp["eta"] = pt.eta;
        jp["p"] = pt.p;
        jp["p_physical"] = pt.p_physical;
        jp["trials"] = pt.trials;
        jp["failures"] = pt.failures;
        jp["p_logical"] = pt.p_logical;
        jp["ci_low"] = pt.ci_low;
        jp["ci_high"] = pt.ci_high;
        jp["seed"] = pt.seed;
        arr.push_back(jp);
    }
    j["points"] = arr;
    return j.dump(2) + "\n";
}

} // namespace tetracode
