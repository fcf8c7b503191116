#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tetracode/decoder.hpp"
#include "tetracode/fermion.hpp"
#include "tetracode/noise.hpp"

namespace tetracode {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval at confidence z (default 95%).
Interval wilson_interval(uint64_t failures, uint64_t trials, double z = 1.959963984540054);

struct CapacityPoint {
    std::string family;
    int n_tetrons = 0;
    double eta = 0.0;
    double p = 0.0;
    double p_physical = 0.0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double p_logical = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    uint64_t seed = 0;
};

struct SimConfig {
    uint64_t trials = 100000;
    uint64_t seed = 0;
    int workers = 1;
    BpConfig bp;
    OsdConfig osd;
};

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

/// Monte Carlo code capacity: per grid point, sample -> syndrome -> decode ->
/// classify. Deterministic for a given seed regardless of worker count.
std::vector<CapacityPoint> run_capacity(const FermionCode& code,
                                        const std::vector<NoiseModel>& grid,
                                        const SimConfig& cfg);

struct PseudothresholdEstimate {
    double eta = 0.0;
    bool found = false;
    double p_star_physical = 0.0;  // crossing in physical-error-rate units
    double p_star_total = 0.0;     // same crossing in total-rate units
    int bracket_lo = -1;
    int bracket_hi = -1;
    std::string method = "loglog-bracket-interp";
};

/// Log-log interpolation of the p_logical = p_physical crossing between the
/// bracketing grid points. found = false when no bracket with nonzero
/// failures exists.
PseudothresholdEstimate pseudothreshold(const std::vector<CapacityPoint>& points);

/// Least-squares slope of log(p_logical) vs log(p) over points with
/// failures >= min_failures. Returns {slope, points_used}.
std::pair<double, int> loglog_slope(const std::vector<CapacityPoint>& points,
                                    uint64_t min_failures = 1);

// ---- bosonic baseline under mixed noise (reservoir study) ----

struct BaselineReport {
    uint64_t trials = 0;
    uint64_t reservoir_clean = 0;  // residual reduces to gamma_d reservoir on every tetron
    uint64_t bosonic_failures = 0; // qubit-level residual outside the base group
    uint64_t within_capacity = 0;  // visible error count <= t_b
    uint64_t within_capacity_failures = 0;
    uint64_t beyond_capacity = 0;
    uint64_t beyond_capacity_failures = 0;
};

BaselineReport run_baseline_reservoir(const FermionCode& code, const NoiseModel& model,
                                      uint64_t trials, uint64_t seed, int workers = 1,
                                      const BpConfig& bp = {}, const OsdConfig& osd = {});

struct ExhaustiveCheck {
    bool pass = true;
    std::string detail;
};

/// Set-0-only decoding of every single-MZM error: gamma_a/b/c must leave a
/// residual supported only on gamma_d of the same tetron, and gamma_d must be
/// syndrome-invisible.
ExhaustiveCheck baseline_single_mzm_exhaustive(const FermionCode& code);

/// Per-tetron residual class modulo {gamma_d, tetron op}: -1 for identity,
/// otherwise the Mechanism value of the matching Pauli.
int tetron_pauli_class(const MajoranaOp& op, int tetron);

// ---- output formats ----

std::string capacity_csv(const std::vector<CapacityPoint>& points);
std::string capacity_report_json(const std::vector<CapacityPoint>& points,
                                 const std::vector<std::pair<std::string, std::string>>& metadata);

} // namespace tetracode
