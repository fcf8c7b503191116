#include "tetracode/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tetracode/noise.hpp"  // RngStream

namespace tetracode {

ScheduleStrategy schedule_strategy_from_string(const std::string& s) {
    if (s == "phased-greedy" || s == "phased") return ScheduleStrategy::PhasedGreedy;
    if (s == "dsatur") return ScheduleStrategy::Dsatur;
    throw std::invalid_argument("unknown schedule strategy: " + s);
}

std::vector<int> tetron_support(const FermionCode& code, int gen) {
    std::vector<int> out;
    const auto& op = code.generators[std::size_t(gen)].op;
    for (int q = 1; q <= code.n_tetrons(); ++q) {
        for (int b = 4 * (q - 1); b < 4 * q; ++b)
            if (op.has(b)) { out.push_back(q); break; }
    }
    return out;
}

ConflictGraph conflict_graph(const FermionCode& code, const std::vector<int>& subset) {
    ConflictGraph g;
    g.gens = subset;
    g.adj.assign(subset.size(), {});
    std::vector<std::vector<int>> supports;
    supports.reserve(subset.size());
    for (int gen : subset) supports.push_back(tetron_support(code, gen));
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            bool shared = false;
            for (int q : supports[i])
                if (std::binary_search(supports[j].begin(), supports[j].end(), q)) {
                    shared = true;
                    break;
                }
            if (shared) {
                g.adj[i].push_back(int(j));
                g.adj[j].push_back(int(i));
            }
        }
    return g;
}

ScheduleCheck verify_schedule(const FermionCode& code, const Schedule& sched) {
    std::vector<int> seen(std::size_t(code.n_generators()), 0);
    for (std::size_t r = 0; r < sched.rounds.size(); ++r) {
        std::vector<int> owner(std::size_t(code.n_tetrons()) + 1, -1);
        for (int gen : sched.rounds[r].gens) {
            if (gen < 0 || gen >= code.n_generators())
                return {false, "round " + std::to_string(r) + ": generator index out of range"};
            ++seen[std::size_t(gen)];
            for (int q : tetron_support(code, gen)) {
                if (owner[std::size_t(q)] >= 0)
                    return {false, "round " + std::to_string(r) + ": generators " +
                                       code.generators[std::size_t(owner[std::size_t(q)])].label +
                                       " and " + code.generators[std::size_t(gen)].label +
                                       " share tetron " + std::to_string(q)};
                owner[std::size_t(q)] = gen;
            }
        }
    }
    for (std::size_t g = 0; g < seen.size(); ++g) {
        if (seen[g] == 0)
            return {false, "generator " + code.generators[g].label + " never scheduled"};
        if (seen[g] > 1)
            return {false, "generator " + code.generators[g].label + " scheduled twice"};
    }
    return {};
}

int schedule_lower_bound(const FermionCode& code) {
    std::vector<int> load(std::size_t(code.n_tetrons()) + 1, 0);
    for (int g = 0; g < code.n_generators(); ++g)
        for (int q : tetron_support(code, g)) ++load[std::size_t(q)];
    return *std::max_element(load.begin(), load.end());
}

namespace {

// DSATUR: pick the vertex with the most distinctly colored neighbors.
std::vector<std::vector<int>> dsatur_color(const ConflictGraph& g) {
    const std::size_t n = g.gens.size();
    std::vector<int> color(n, -1);
    std::vector<std::vector<bool>> nbr_colors(n);
    std::vector<int> sat(n, 0);
    int n_colors = 0;
    for (std::size_t done = 0; done < n; ++done) {
        int best = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (best < 0 || sat[v] > sat[std::size_t(best)] ||
                (sat[v] == sat[std::size_t(best)] &&
                 g.adj[v].size() > g.adj[std::size_t(best)].size()))
                best = int(v);
        }
        std::vector<bool> used(std::size_t(n_colors) + 1, false);
        for (int u : g.adj[std::size_t(best)])
            if (color[std::size_t(u)] >= 0) used[std::size_t(color[std::size_t(u)])] = true;
        int c = 0;
        while (used[std::size_t(c)]) ++c;
        color[std::size_t(best)] = c;
        n_colors = std::max(n_colors, c + 1);
        for (int u : g.adj[std::size_t(best)]) {
            auto& nc = nbr_colors[std::size_t(u)];
            if (int(nc.size()) <= c) nc.resize(std::size_t(c) + 1, false);
            if (!nc[std::size_t(c)]) {
                nc[std::size_t(c)] = true;
                ++sat[std::size_t(u)];
            }
        }
    }
    std::vector<std::vector<int>> rounds(static_cast<std::size_t>(n_colors));
    for (std::size_t v = 0; v < n; ++v) rounds[std::size_t(color[v])].push_back(int(v));
    return rounds;
}

// Fixed-generator round assignment into at most `target` rounds, by
// randomized greedy restarts. Returns rounds of vertex positions.
std::optional<std::vector<std::vector<int>>> assign_rounds(
    const FermionCode& code, const std::vector<int>& gens, int target,
    uint64_t seed, int max_attempts) {
    std::vector<std::vector<int>> supports;
    for (int gen : gens) supports.push_back(tetron_support(code, gen));
    std::vector<int> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        RngStream rng(seed, uint64_t(attempt));
        // random order, heavier generators first
        std::vector<std::pair<uint64_t, int>> keyed;
        for (int v : order) keyed.emplace_back(rng.next_u64(), v);
        std::stable_sort(keyed.begin(), keyed.end(), [&](auto& a, auto& b) {
            if (supports[std::size_t(a.second)].size() != supports[std::size_t(b.second)].size())
                return supports[std::size_t(a.second)].size() > supports[std::size_t(b.second)].size();
            return a.first < b.first;
        });
        std::vector<std::vector<bool>> used(std::size_t(target),
                                            std::vector<bool>(std::size_t(code.n_tetrons()) + 1, false));
        std::vector<std::vector<int>> rounds(static_cast<std::size_t>(target));
        bool ok = true;
        for (auto [_, v] : keyed) {
            int placed = -1;
            for (int r = 0; r < target; ++r) {
                bool free = true;
                for (int q : supports[std::size_t(v)])
                    if (used[std::size_t(r)][std::size_t(q)]) { free = false; break; }
                if (free) { placed = r; break; }
            }
            if (placed < 0) { ok = false; break; }
            rounds[std::size_t(placed)].push_back(v);
            for (int q : supports[std::size_t(v)]) used[std::size_t(placed)][std::size_t(q)] = true;
        }
        if (ok) {
            rounds.erase(std::remove_if(rounds.begin(), rounds.end(),
                                        [](const auto& r) { return r.empty(); }),
                         rounds.end());
            return rounds;
        }
    }
    return std::nullopt;
}

void append_rounds(Schedule& sched, const std::string& phase, const std::vector<int>& gens,
                   const std::vector<std::vector<int>>& rounds_by_pos) {
    for (const auto& round : rounds_by_pos) {
        Schedule::Round r;
        r.phase = phase;
        for (int pos : round) r.gens.push_back(gens[std::size_t(pos)]);
        std::sort(r.gens.begin(), r.gens.end());
        sched.rounds.push_back(std::move(r));
    }
}

// Color one phase: deepen from the per-tetron load bound, fall back to dsatur.
std::vector<std::vector<int>> color_subset(const FermionCode& code, const std::vector<int>& gens,
                                           uint64_t seed) {
    if (gens.empty()) return {};
    std::vector<int> load(static_cast<std::size_t>(code.n_tetrons()) + 1, 0);
    for (int gen : gens)
        for (int q : tetron_support(code, gen)) ++load[std::size_t(q)];
    int lb = *std::max_element(load.begin(), load.end());
    auto dsat = dsatur_color(conflict_graph(code, gens));
    for (int target = lb; target < int(dsat.size()); ++target) {
        auto rounds = assign_rounds(code, gens, target, seed, 2000);
        if (rounds) return *rounds;
    }
    return dsat;
}

} // namespace

Schedule schedule(const FermionCode& code, ScheduleStrategy strategy, uint64_t seed) {
    Schedule sched;
    if (strategy == ScheduleStrategy::Dsatur) {
        std::vector<int> all(static_cast<std::size_t>(code.n_generators()));
        std::iota(all.begin(), all.end(), 0);
        ConflictGraph g = conflict_graph(code, all);
        append_rounds(sched, "dsatur", all, dsatur_color(g));
        return sched;
    }

    std::vector<int> set0_x, set0_z, sets_i;
    for (int i = 0; i < code.n_generators(); ++i) {
        const auto& gen = code.generators[std::size_t(i)];
        if (gen.set != 0) {
            sets_i.push_back(i);
        } else {
            bool is_x = !gen.terms.empty() && gen.terms.front().pauli == Pauli::X;
            (is_x ? set0_x : set0_z).push_back(i);
        }
    }
    for (auto [phase, gens] : {std::pair{"set0-X", &set0_x}, {"set0-Z", &set0_z}})
        append_rounds(sched, phase, *gens, color_subset(code, *gens, seed));
    append_rounds(sched, "sets-i", sets_i, color_subset(code, sets_i, seed));
    return sched;
}

std::optional<std::vector<int>> find_schedulable_pick(const BosonicCode& base, int rounds_target,
                                                      uint64_t seed, int max_attempts) {
    const int n = base.n;
    std::vector<std::vector<int>> qubit_gens(std::size_t(n) + 1);
    std::vector<std::vector<int>> gen_supp(base.generators.size());
    for (std::size_t g = 0; g < base.generators.size(); ++g) {
        for (const auto& t : base.generators[g].terms) {
            qubit_gens[std::size_t(t.qubit)].push_back(int(g));
            gen_supp[g].push_back(t.qubit);
        }
        std::sort(gen_supp[g].begin(), gen_supp[g].end());
    }
    for (int i = 1; i <= n; ++i)
        if (qubit_gens[std::size_t(i)].empty()) return std::nullopt;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        RngStream rng(seed, uint64_t(attempt));
        // constrained qubits first
        std::vector<std::tuple<std::size_t, uint64_t, int>> order;
        for (int i = 1; i <= n; ++i)
            order.emplace_back(qubit_gens[std::size_t(i)].size(), rng.next_u64(), i);
        std::sort(order.begin(), order.end());
        std::vector<std::vector<bool>> used(std::size_t(rounds_target),
                                            std::vector<bool>(std::size_t(n) + 1, false));
        std::vector<std::size_t> round_fill(std::size_t(rounds_target), 0);
        std::vector<int> pick(std::size_t(n), -1);
        bool ok = true;
        for (auto [_, rkey, i] : order) {
            // all feasible (generator, round) placements, emptiest round first
            int best_g = -1, best_r = -1;
            std::size_t best_fill = SIZE_MAX;
            uint64_t best_key = 0;
            for (int g : qubit_gens[std::size_t(i)]) {
                for (int r = 0; r < rounds_target; ++r) {
                    bool free = true;
                    for (int q : gen_supp[std::size_t(g)])
                        if (used[std::size_t(r)][std::size_t(q)]) { free = false; break; }
                    if (!free) continue;
                    uint64_t key = rng.next_u64();
                    if (round_fill[std::size_t(r)] < best_fill ||
                        (round_fill[std::size_t(r)] == best_fill && key < best_key)) {
                        best_fill = round_fill[std::size_t(r)];
                        best_key = key;
                        best_g = g;
                        best_r = r;
                    }
                }
            }
            if (best_g < 0) { ok = false; break; }
            pick[std::size_t(i - 1)] = best_g;
            for (int q : gen_supp[std::size_t(best_g)]) used[std::size_t(best_r)][std::size_t(q)] = true;
            round_fill[std::size_t(best_r)] += gen_supp[std::size_t(best_g)].size();
        }
        if (ok) return pick;
    }
    return std::nullopt;
}

int sets_round_target(const std::string& family) {
    if (family == "surface") return 4;
    return 7;  // color family and the steane instance
}

} // namespace tetracode
