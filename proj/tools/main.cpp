#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tetracode/factory.hpp"
#include "tetracode/ft.hpp"
#include "tetracode/io.hpp"
#include "tetracode/scheduler.hpp"
#include "tetracode/sim.hpp"

namespace {

constexpr const char* kVersion = "tetracode 0.1.0";

// exit codes: 0 ok, 2 verification/injection failure, 3 I/O error, 4 config error
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;
constexpr int kExitConfig = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t default_seed() {
    if (const char* env = std::getenv("TETRACODE_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw CLI::ValidationError("TETRACODE_SEED is not an integer");
    }
    return 12345;
}

// grid syntax "lo:hi:n" (log-spaced) or a single value
std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts.size() == 1) return {std::stod(parts[0])};
        if (parts.size() == 3)
            return tetracode::log_grid(std::stod(parts[0]), std::stod(parts[1]),
                                       std::stoi(parts[2]));
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("grid must be a value or lo:hi:n, got '" + text + "'");
}

struct CodeSource {
    std::string file;
    std::string family;
    int d = 3;
    std::string pick = "scheduled";
    uint64_t seed = 12345;

    tetracode::FermionCode resolve() const {
        if (!file.empty()) {
            try {
                return tetracode::load_code(file);
            } catch (const std::exception& e) {
                throw IoError(e.what());
            }
        }
        if (family.empty())
            throw CLI::ValidationError("give either --code FILE or --family (+ --d)");
        return tetracode::build_fermion_code(family, d,
                                             tetracode::pick_policy_from_string(pick), seed);
    }
};

void add_code_source(CLI::App* app, CodeSource& src) {
    app->add_option("--code", src.file, "code file produced by `code build`");
    app->add_option("--family", src.family, "code family: steane, color, surface");
    app->add_option("--d", src.d, "base code distance (odd, >= 3)");
    app->add_option("--pick", src.pick, "pick policy: scheduled or default")
        ->check(CLI::IsMember({"scheduled", "default"}));
}

struct DecoderFlags {
    int bp_iters = 30;
    double bp_alpha = 0.625;
    int osd_order = 0;

    void add_to(CLI::App* app) {
        app->add_option("--bp-iters", bp_iters, "BP iteration cap");
        app->add_option("--bp-alpha", bp_alpha, "min-sum normalization factor");
        app->add_option("--osd-order", osd_order, "OSD-E order (0 disables re-encoding)");
    }
    tetracode::BpConfig bp() const { return {bp_iters, bp_alpha}; }
    tetracode::OsdConfig osd() const { return {osd_order}; }
};

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

void emit(const std::vector<tetracode::CapacityPoint>& points, const std::string& csv_path,
          const std::string& json_path,
          const std::vector<std::pair<std::string, std::string>>& metadata) {
    std::string csv = tetracode::capacity_csv(points);
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        tetracode::write_text_file(csv_path, csv);
        std::cout << "wrote " << csv_path << "\n";
    }
    if (!json_path.empty()) {
        tetracode::write_text_file(json_path, tetracode::capacity_report_json(points, metadata));
        std::cout << "wrote " << json_path << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    using namespace tetracode;

    CLI::App app{"Majorana fermionic codes on tetron architectures"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    uint64_t seed = 0;
    bool seed_given = false;
    app.add_option("--seed", seed, "global RNG seed (default: $TETRACODE_SEED or 12345)")
        ->each([&](const std::string&) { seed_given = true; });

    // ---- code build / code verify ----
    CLI::App* code = app.add_subcommand("code", "construct and check code files");
    code->require_subcommand(1);

    CLI::App* build = code->add_subcommand("build", "construct a fermionic code");
    std::string b_family = "color";
    int b_d = 3;
    std::string b_pick = "scheduled";
    std::string b_out;
    build->add_option("--family", b_family, "steane, color, surface")->required();
    build->add_option("--d", b_d, "base distance")->required();
    build->add_option("--pick", b_pick, "pick policy")
        ->check(CLI::IsMember({"scheduled", "default"}));
    build->add_option("-o,--out", b_out, "output code file");

    CLI::App* verify = code->add_subcommand("verify", "verify a code file");
    std::string v_file;
    int v_wmax = 6;
    uint64_t v_budget = 500'000'000;
    verify->add_option("file", v_file, "code file")->required();
    verify->add_option("--wmax", v_wmax, "distance exhaustion bound (0 skips)");
    verify->add_option("--budget", v_budget, "enumeration budget for the distance step");

    // ---- schedule ----
    CLI::App* sched_cmd = app.add_subcommand("schedule", "syndrome measurement rounds");
    CodeSource s_src;
    add_code_source(sched_cmd, s_src);
    std::string s_strategy = "phased-greedy";
    std::string s_out;
    bool s_table = false;
    sched_cmd->add_option("--strategy", s_strategy, "phased-greedy or dsatur")
        ->check(CLI::IsMember({"phased-greedy", "phased", "dsatur"}));
    sched_cmd->add_option("-o,--out", s_out, "output schedule file");
    sched_cmd->add_flag("--table", s_table, "print the per-round tetron usage table");

    // ---- sim capacity / sim ft ----
    CLI::App* sim = app.add_subcommand("sim", "Monte Carlo experiments");
    sim->require_subcommand(1);

    CLI::App* cap = sim->add_subcommand("capacity", "code-capacity logical error rates");
    CodeSource c_src;
    add_code_source(cap, c_src);
    std::vector<double> c_etas{1.0};
    std::string c_grid = "1e-2:2e-1:10";
    uint64_t c_trials = 100000;
    int c_workers = 1;
    std::string c_csv, c_json;
    bool c_pseudo = false;
    DecoderFlags c_dec;
    cap->add_option("--eta", c_etas, "noise bias values");
    cap->add_option("--p", c_grid, "total error rate grid, lo:hi:n (log-spaced)");
    cap->add_option("--trials", c_trials, "Monte Carlo trials per point");
    cap->add_option("--workers", c_workers, "worker threads (0 = hardware)");
    cap->add_option("--csv", c_csv, "CSV output path (default: stdout)");
    cap->add_option("--json", c_json, "JSON report path");
    cap->add_flag("--pseudothreshold", c_pseudo, "report the crossing per eta");
    c_dec.add_to(cap);

    CLI::App* ft = sim->add_subcommand("ft", "fault-tolerant measurement sequence runs");
    CodeSource f_src;
    add_code_source(ft, f_src);
    std::vector<double> f_etas{1.0};
    std::string f_grid = "3e-3:3e-2:8";
    uint64_t f_trials = 20000;
    int f_workers = 1;
    int f_reps = 3;
    std::string f_sequence;
    std::string f_csv, f_json;
    bool f_pseudo = false;
    DecoderFlags f_dec;
    ft->add_option("--eta", f_etas, "noise bias values");
    ft->add_option("--p", f_grid, "total error rate grid, lo:hi:n");
    ft->add_option("--trials", f_trials, "trials per point");
    ft->add_option("--workers", f_workers, "worker threads (0 = hardware)");
    ft->add_option("--repetitions", f_reps, "extraction repetitions of the default sequence");
    ft->add_option("--sequence", f_sequence, "sequence file (default: generated)");
    ft->add_option("--csv", f_csv, "CSV output path (default: stdout)");
    ft->add_option("--json", f_json, "JSON report path");
    ft->add_flag("--pseudothreshold", f_pseudo, "report the crossing per eta");
    f_dec.add_to(ft);

    // ---- inject ----
    CLI::App* inject = app.add_subcommand("inject", "exhaustive single-fault injection");
    CodeSource i_src;
    add_code_source(inject, i_src);
    int i_reps = 3;
    std::string i_sequence;
    double i_p = 0.01, i_eta = 1.0;
    DecoderFlags i_dec;
    inject->add_option("--repetitions", i_reps, "extraction repetitions of the default sequence");
    inject->add_option("--sequence", i_sequence, "sequence file (default: generated)");
    inject->add_option("--p", i_p, "decoder prior total rate");
    inject->add_option("--eta", i_eta, "decoder prior bias");
    i_dec.add_to(inject);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
        app.exit(e);
        return kExitConfig;
    }

    if (!seed_given) {
        try {
            seed = default_seed();
        } catch (const CLI::ValidationError&) {
            std::cerr << "error: TETRACODE_SEED is not an integer\n";
            return kExitConfig;
        }
    }

    try {
        if (build->parsed()) {
            FermionCode fc =
                build_fermion_code(b_family, b_d, pick_policy_from_string(b_pick), seed);
            std::cout << fc.params_str() << " (" << fc.n_generators()
                      << " listed generators, rank " << fc.stabilizer_basis().rank() << ")\n";
            if (!b_out.empty()) {
                save_code(fc, b_out);
                std::cout << "wrote " << b_out << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            std::vector<std::string> issues;
            FermionCode fc;
            try {
                fc = load_code(v_file, &issues);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitIo;
            }
            VerifyReport rep = verify_fermion_code(fc, v_wmax, v_budget, issues);
            for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
            for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
            if (rep.distance_checked && rep.checked_distance > 0)
                std::cout << "distance=" << rep.checked_distance << "\n";
            std::cout << (rep.pass ? "PASS " : "FAIL ") << fc.params_str() << "\n";
            return rep.pass ? 0 : kExitVerify;
        }
        if (sched_cmd->parsed()) {
            s_src.seed = seed;
            FermionCode fc = s_src.resolve();
            Schedule s = schedule(fc, schedule_strategy_from_string(s_strategy), seed);
            ScheduleCheck chk = verify_schedule(fc, s);
            if (!chk.ok) {
                std::cerr << "error: emitted schedule invalid: " << chk.violation << "\n";
                return kExitVerify;
            }
            std::cout << fc.params_str() << " latency " << s.latency()
                      << " (lower bound " << schedule_lower_bound(fc) << ")\n";
            if (s_table) std::cout << schedule_table(fc, s);
            if (!s_out.empty()) {
                write_text_file(s_out, schedule_to_json(fc, s));
                std::cout << "wrote " << s_out << "\n";
            }
            return 0;
        }
        if (cap->parsed()) {
            c_src.seed = seed;
            FermionCode fc = c_src.resolve();
            SimConfig cfg;
            cfg.trials = c_trials;
            cfg.seed = seed;
            cfg.workers = c_workers > 0 ? c_workers
                                        : int(std::thread::hardware_concurrency());
            cfg.bp = c_dec.bp();
            cfg.osd = c_dec.osd();
            std::vector<CapacityPoint> all;
            for (double eta : c_etas) {
                std::vector<NoiseModel> grid;
                for (double p : parse_grid(c_grid)) grid.emplace_back(p, eta);
                auto pts = run_capacity(fc, grid, cfg);
                if (c_pseudo) {
                    PseudothresholdEstimate est = pseudothreshold(pts);
                    if (est.found)
                        std::cout << "pseudothreshold eta=" << eta << ": p*_physical="
                                  << est.p_star_physical << " (p=" << est.p_star_total << ")\n";
                    else
                        std::cout << "pseudothreshold eta=" << eta << ": no bracket on grid\n";
                }
                all.insert(all.end(), pts.begin(), pts.end());
            }
            emit(all, c_csv, c_json,
                 {{"command", join_args(argc, argv)},
                  {"version", kVersion},
                  {"seed", std::to_string(seed)},
                  {"bp_iters", std::to_string(cfg.bp.max_iters)},
                  {"bp_alpha", std::to_string(cfg.bp.alpha)},
                  {"osd_order", std::to_string(cfg.osd.order)}});
            return 0;
        }
        if (ft->parsed()) {
            f_src.seed = seed;
            FermionCode fc = f_src.resolve();
            FtSequence seq;
            if (f_sequence.empty()) {
                seq = default_ft_sequence(fc, f_reps, seed);
            } else {
                try {
                    seq = ft_sequence_from_json(fc, read_text_file(f_sequence));
                } catch (const std::exception& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return kExitIo;
                }
            }
            validate_ft_sequence(fc, seq);
            SimConfig cfg;
            cfg.trials = f_trials;
            cfg.seed = seed;
            cfg.workers = f_workers > 0 ? f_workers
                                        : int(std::thread::hardware_concurrency());
            cfg.bp = f_dec.bp();
            cfg.osd = f_dec.osd();
            std::vector<CapacityPoint> all;
            for (double eta : f_etas) {
                std::vector<NoiseModel> grid;
                for (double p : parse_grid(f_grid)) grid.emplace_back(p, eta);
                auto pts = run_ft(fc, seq, grid, cfg);
                if (f_pseudo) {
                    PseudothresholdEstimate est = pseudothreshold(pts);
                    if (est.found)
                        std::cout << "ft crossing eta=" << eta << ": p*_physical="
                                  << est.p_star_physical << " (p=" << est.p_star_total << ")\n";
                    else
                        std::cout << "ft crossing eta=" << eta << ": no bracket on grid\n";
                }
                all.insert(all.end(), pts.begin(), pts.end());
            }
            char hash[32];
            std::snprintf(hash, sizeof hash, "%016llx",
                          (unsigned long long)seq.content_hash());
            emit(all, f_csv, f_json,
                 {{"command", join_args(argc, argv)},
                  {"version", kVersion},
                  {"seed", std::to_string(seed)},
                  {"sequence", seq.name},
                  {"sequence_hash", hash},
                  {"sequence_steps", std::to_string(seq.n_steps())},
                  {"bp_iters", std::to_string(cfg.bp.max_iters)},
                  {"osd_order", std::to_string(cfg.osd.order)}});
            return 0;
        }
        if (inject->parsed()) {
            i_src.seed = seed;
            FermionCode fc = i_src.resolve();
            FtSequence seq;
            if (i_sequence.empty()) {
                seq = default_ft_sequence(fc, i_reps, seed);
            } else {
                try {
                    seq = ft_sequence_from_json(fc, read_text_file(i_sequence));
                } catch (const std::exception& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return kExitIo;
                }
            }
            InjectReport rep =
                inject_single_faults(fc, seq, NoiseModel(i_p, i_eta), i_dec.bp(), i_dec.osd());
            if (rep.pass()) {
                std::cout << "PASS: 0 logical failures over all " << rep.cases
                          << " single faults\n";
                return 0;
            }
            std::cout << "FAIL: " << rep.failures << " of " << rep.cases
                      << " single faults caused a logical error (first: " << rep.first_failure
                      << ")\n";
            return kExitVerify;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitConfig;
}
