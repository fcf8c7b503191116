#include "tetracode/noise.hpp"

#include <stdexcept>

namespace tetracode {

const char* mechanism_name(Mechanism m) {
    switch (m) {
        case Mechanism::PX: return "X";
        case Mechanism::PY: return "Y";
        case Mechanism::PZ: return "Z";
        case Mechanism::GA: return "ga";
        case Mechanism::GB: return "gb";
        case Mechanism::GC: return "gc";
        case Mechanism::GD: return "gd";
    }
    return "?";
}

bool mechanism_is_fermionic(Mechanism m) { return int(m) >= int(Mechanism::GA); }

MajoranaOp mechanism_op(int tetron, Mechanism m, const TetronLayout& layout) {
    switch (m) {
        case Mechanism::PX: return pauli_to_majorana({tetron, Pauli::X, Rep::R}, layout);
        case Mechanism::PY: return pauli_to_majorana({tetron, Pauli::Y, Rep::R}, layout);
        case Mechanism::PZ: return pauli_to_majorana({tetron, Pauli::Z, Rep::R}, layout);
        default: {
            MajoranaOp out(layout.n_maj());
            out.flip(layout.mzm_index(tetron, Mzm(int(m) - int(Mechanism::GA))));
            return out;
        }
    }
}

NoiseModel::NoiseModel(double p_, double eta_) : p(p_), eta(eta_) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("NoiseModel: p must be in [0, 1]");
    if (eta < 0.0) throw std::invalid_argument("NoiseModel: eta must be >= 0");
}

ChannelProbs channel_probs(const NoiseModel& model) {
    ChannelProbs cp;
    double pauli = model.p / (3.0 * (model.eta + 1.0));
    double gamma = model.p * model.eta / (4.0 * (model.eta + 1.0));
    for (int i = 0; i < 3; ++i) cp.mech[std::size_t(i)] = pauli;
    for (int i = 3; i < 7; ++i) cp.mech[std::size_t(i)] = gamma;
    double total = 3.0 * pauli + 4.0 * gamma;
    cp.identity = 1.0 - total;
    return cp;
}

double physical_error_rate(const NoiseModel& model) {
    return model.p_bosonic() + 0.75 * model.p_fermionic();
}

namespace {
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream) {
    state_ = mix64(seed + 0x9E3779B97F4A7C15ULL) ^ mix64(stream + 0x6A09E667F3BCC909ULL);
}

uint64_t RngStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

void sample_error_into(const ChannelProbs& probs, const TetronLayout& layout,
                       RngStream& rng, ErrorSample& out) {
    const int n = layout.n_tetrons;
    out.labels.assign(std::size_t(n), kNoError);
    if (out.op.n_maj() != layout.n_maj()) out.op = MajoranaOp(layout.n_maj());
    else out.op.support().clear();
    for (int q = 1; q <= n; ++q) {
        double u = rng.next_double();
        double acc = 0.0;
        for (int m = 0; m < kNumMechanisms; ++m) {
            acc += probs.mech[std::size_t(m)];
            if (u < acc) {
                out.labels[std::size_t(q - 1)] = int8_t(m);
                out.op.support() ^= mechanism_op(q, Mechanism(m), layout).support();
                break;
            }
        }
    }
}

ErrorSample sample_error(const NoiseModel& model, const TetronLayout& layout,
                         uint64_t seed, uint64_t trial) {
    ChannelProbs probs = channel_probs(model);
    RngStream rng(seed, trial);
    ErrorSample out;
    sample_error_into(probs, layout, rng, out);
    return out;
}

} // namespace tetracode
