#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tetracode/majorana.hpp"

namespace tetracode {

/// The seven per-tetron error mechanisms of the biased channel.
enum class Mechanism : uint8_t { PX = 0, PY, PZ, GA, GB, GC, GD };
inline constexpr int kNumMechanisms = 7;
inline constexpr int8_t kNoError = -1;

const char* mechanism_name(Mechanism m);
bool mechanism_is_fermionic(Mechanism m);

/// Realized Majorana operator of one mechanism on one tetron. Bosonic
/// mechanisms map through R; fermionic ones are single-MZM flips.
MajoranaOp mechanism_op(int tetron, Mechanism m, const TetronLayout& layout);

/// Total error rate p per tetron split by noise bias eta between bosonic
/// (p/(eta+1)) and fermionic (p eta/(eta+1)) sectors.
struct NoiseModel {
    double p = 0.0;
    double eta = 1.0;

    NoiseModel() = default;
    NoiseModel(double p_, double eta_);

    double p_bosonic() const { return p / (eta + 1.0); }
    double p_fermionic() const { return p * eta / (eta + 1.0); }
};

struct ChannelProbs {
    std::array<double, kNumMechanisms> mech{};  // indexed by Mechanism
    double identity = 1.0;

    double operator[](Mechanism m) const { return mech[std::size_t(m)]; }
};

/// p_X = p_Y = p_Z = p/(3(eta+1)); p_a..p_d = p eta/(4(eta+1)).
ChannelProbs channel_probs(const NoiseModel& model);

/// p_b + 3 p_f / 4: every bosonic error hits a physical qubit, gamma_d does not.
double physical_error_rate(const NoiseModel& model);

/// Deterministic keyed stream: one independent sequence per (seed, stream id).
class RngStream {
public:
    RngStream(uint64_t seed, uint64_t stream);

    uint64_t next_u64();
    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
    bool bernoulli(double prob) { return next_double() < prob; }

private:
    uint64_t state_;
};

/// One draw of the 8-outcome per-tetron channel across the layout.
struct ErrorSample {
    std::vector<int8_t> labels;  // per tetron: kNoError or Mechanism value
    MajoranaOp op;
};

/// Independent per-tetron draw, reproducible for a given (seed, trial).
ErrorSample sample_error(const NoiseModel& model, const TetronLayout& layout,
                         uint64_t seed, uint64_t trial);

/// In-place variant for hot loops; draws consume `rng` in tetron order.
void sample_error_into(const ChannelProbs& probs, const TetronLayout& layout,
                       RngStream& rng, ErrorSample& out);

} // namespace tetracode
