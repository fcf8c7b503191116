#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetracode/factory.hpp"
#include "tetracode/ft.hpp"
#include "tetracode/io.hpp"
#include "tetracode/scheduler.hpp"
#include "tetracode/sim.hpp"

namespace py = pybind11;
using namespace tetracode;

namespace {

py::dict point_to_dict(const CapacityPoint& pt) {
    py::dict d;
    d["family"] = pt.family;
    d["n_tetrons"] = pt.n_tetrons;
    d["eta"] = pt.eta;
    d["p"] = pt.p;
    d["p_physical"] = pt.p_physical;
    d["trials"] = pt.trials;
    d["failures"] = pt.failures;
    d["p_logical"] = pt.p_logical;
    d["ci_low"] = pt.ci_low;
    d["ci_high"] = pt.ci_high;
    d["seed"] = pt.seed;
    return d;
}

SimConfig make_cfg(uint64_t trials, uint64_t seed, int workers, int bp_iters, int osd_order) {
    SimConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.bp.max_iters = bp_iters;
    cfg.osd.order = osd_order;
    return cfg;
}

std::vector<NoiseModel> make_grid(const std::vector<double>& ps, double eta) {
    std::vector<NoiseModel> grid;
    for (double p : ps) grid.emplace_back(p, eta);
    return grid;
}

FtSequence resolve_sequence(const FermionCode& code, const std::string& sequence_json,
                            int repetitions, uint64_t seed) {
    if (sequence_json.empty()) return default_ft_sequence(code, repetitions, seed);
    return ft_sequence_from_json(code, sequence_json);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Majorana fermionic codes on tetron architectures";

    py::class_<FermionCode>(m, "FermionCode")
        .def_property_readonly("family", [](const FermionCode& c) { return c.base.family; })
        .def_property_readonly("n_tetrons", &FermionCode::n_tetrons)
        .def_property_readonly("n_maj", &FermionCode::n_maj)
        .def_property_readonly("n_generators", &FermionCode::n_generators)
        .def_property_readonly("k", [](const FermionCode& c) { return c.k; })
        .def_property_readonly("d_f", [](const FermionCode& c) { return c.d_f; })
        .def_property_readonly("d_b", [](const FermionCode& c) { return c.base.d_b; })
        .def_property_readonly("pick", [](const FermionCode& c) { return c.pick; })
        .def("params", &FermionCode::params_str)
        .def("generator_labels",
             [](const FermionCode& c) {
                 std::vector<std::string> out;
                 for (const auto& g : c.generators) out.push_back(g.label);
                 return out;
             })
        .def("generator_support",
             [](const FermionCode& c, int g) {
                 std::vector<std::size_t> bits =
                     c.generators.at(static_cast<std::size_t>(g)).op.support().ones();
                 return bits;
             })
        .def("syndrome_of_bits",
             [](const FermionCode& c, const std::vector<int>& bits) {
                 MajoranaOp e(c.n_maj(), bits);
                 std::vector<int> out;
                 BitVec s = c.syndrome(e);
                 for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.get(i) ? 1 : 0);
                 return out;
             })
        .def("in_stabilizer_group",
             [](const FermionCode& c, const std::vector<int>& bits) {
                 return c.in_stabilizer_group(MajoranaOp(c.n_maj(), bits));
             })
        .def("min_logical_weight",
             [](const FermionCode& c, int w_max) {
                 DistanceResult dr = min_logical_weight(c, w_max);
                 return py::make_tuple(dr.found, dr.value);
             })
        .def("verify",
             [](const FermionCode& c, int w_max) {
                 VerifyReport rep = verify_fermion_code(c, w_max);
                 py::dict d;
                 d["pass"] = rep.pass;
                 d["failures"] = rep.failures;
                 d["notes"] = rep.notes;
                 d["distance_checked"] = rep.distance_checked;
                 d["checked_distance"] = rep.checked_distance;
                 return d;
             },
             py::arg("w_max") = 6)
        .def("to_json", &code_to_json)
        .def("__repr__", [](const FermionCode& c) { return "<FermionCode " + c.params_str() + ">"; });

    m.def(
        "build_code",
        [](const std::string& family, int d, const std::string& pick, uint64_t seed) {
            return build_fermion_code(family, d, pick_policy_from_string(pick), seed);
        },
        py::arg("family"), py::arg("d"), py::arg("pick") = "scheduled",
        py::arg("seed") = 12345);

    m.def("code_from_json", [](const std::string& text) { return code_from_json(text); });
    m.def("load_code", [](const std::string& path) { return load_code(path); });
    m.def("save_code", &save_code);

    m.def("channel_probs", [](double p, double eta) {
        ChannelProbs cp = channel_probs(NoiseModel(p, eta));
        py::dict d;
        d["X"] = cp.mech[0];
        d["Y"] = cp.mech[1];
        d["Z"] = cp.mech[2];
        d["ga"] = cp.mech[3];
        d["gb"] = cp.mech[4];
        d["gc"] = cp.mech[5];
        d["gd"] = cp.mech[6];
        d["identity"] = cp.identity;
        return d;
    });
    m.def("physical_error_rate",
          [](double p, double eta) { return physical_error_rate(NoiseModel(p, eta)); });

    m.def(
        "schedule",
        [](const FermionCode& code, const std::string& strategy, uint64_t seed) {
            Schedule s = schedule(code, schedule_strategy_from_string(strategy), seed);
            ScheduleCheck chk = verify_schedule(code, s);
            py::dict d;
            d["latency"] = s.latency();
            d["valid"] = chk.ok;
            d["lower_bound"] = schedule_lower_bound(code);
            py::list rounds;
            for (const auto& r : s.rounds) {
                py::dict jr;
                jr["phase"] = r.phase;
                py::list gens;
                for (int g : r.gens) gens.append(code.generators[std::size_t(g)].label);
                jr["generators"] = gens;
                rounds.append(jr);
            }
            d["rounds"] = rounds;
            return d;
        },
        py::arg("code"), py::arg("strategy") = "phased-greedy", py::arg("seed") = 12345);

    m.def(
        "run_capacity",
        [](const FermionCode& code, const std::vector<double>& ps, double eta, uint64_t trials,
           uint64_t seed, int workers, int bp_iters, int osd_order) {
            auto pts = run_capacity(code, make_grid(ps, eta),
                                    make_cfg(trials, seed, workers, bp_iters, osd_order));
            py::list out;
            for (const auto& pt : pts) out.append(point_to_dict(pt));
            return out;
        },
        py::arg("code"), py::arg("ps"), py::arg("eta") = 1.0, py::arg("trials") = 100000,
        py::arg("seed") = 12345, py::arg("workers") = 1, py::arg("bp_iters") = 30,
        py::arg("osd_order") = 0);

    m.def(
        "capacity_csv",
        [](const FermionCode& code, const std::vector<double>& ps, double eta, uint64_t trials,
           uint64_t seed, int workers) {
            auto pts =
                run_capacity(code, make_grid(ps, eta), make_cfg(trials, seed, workers, 30, 0));
            return capacity_csv(pts);
        },
        py::arg("code"), py::arg("ps"), py::arg("eta") = 1.0, py::arg("trials") = 100000,
        py::arg("seed") = 12345, py::arg("workers") = 1);

    m.def(
        "run_ft",
        [](const FermionCode& code, const std::vector<double>& ps, double eta, uint64_t trials,
           uint64_t seed, int workers, int repetitions, const std::string& sequence_json) {
            FtSequence seq = resolve_sequence(code, sequence_json, repetitions, seed);
            auto pts =
                run_ft(code, seq, make_grid(ps, eta), make_cfg(trials, seed, workers, 30, 0));
            py::list out;
            for (const auto& pt : pts) out.append(point_to_dict(pt));
            return out;
        },
        py::arg("code"), py::arg("ps"), py::arg("eta") = 1.0, py::arg("trials") = 20000,
        py::arg("seed") = 12345, py::arg("workers") = 1, py::arg("repetitions") = 3,
        py::arg("sequence_json") = std::string());

    m.def(
        "inject_single_faults",
        [](const FermionCode& code, int repetitions, const std::string& sequence_json,
           double p, double eta, uint64_t seed) {
            FtSequence seq = resolve_sequence(code, sequence_json, repetitions, seed);
            InjectReport rep = inject_single_faults(code, seq, NoiseModel(p, eta));
            py::dict d;
            d["cases"] = rep.cases;
            d["failures"] = rep.failures;
            d["pass"] = rep.pass();
            d["first_failure"] = rep.first_failure;
            return d;
        },
        py::arg("code"), py::arg("repetitions") = 3, py::arg("sequence_json") = std::string(),
        py::arg("p") = 0.01, py::arg("eta") = 1.0, py::arg("seed") = 12345);

    m.def(
        "default_ft_sequence_json",
        [](const FermionCode& code, int repetitions, uint64_t seed) {
            return ft_sequence_to_json(default_ft_sequence(code, repetitions, seed));
        },
        py::arg("code"), py::arg("repetitions") = 3, py::arg("seed") = 12345);

    m.def(
        "run_baseline_reservoir",
        [](const FermionCode& code, double p, double eta, uint64_t trials, uint64_t seed,
           int workers) {
            BaselineReport rep =
                run_baseline_reservoir(code, NoiseModel(p, eta), trials, seed, workers);
            py::dict d;
            d["trials"] = rep.trials;
            d["reservoir_clean"] = rep.reservoir_clean;
            d["bosonic_failures"] = rep.bosonic_failures;
            d["within_capacity"] = rep.within_capacity;
            d["within_capacity_failures"] = rep.within_capacity_failures;
            d["beyond_capacity"] = rep.beyond_capacity;
            d["beyond_capacity_failures"] = rep.beyond_capacity_failures;
            return d;
        },
        py::arg("code"), py::arg("p"), py::arg("eta"), py::arg("trials") = 10000,
        py::arg("seed") = 12345, py::arg("workers") = 1);

    m.def("pseudothreshold_from_points",
          [](const std::vector<std::map<std::string, double>>& rows) {
              std::vector<CapacityPoint> pts;
              for (const auto& r : rows) {
                  CapacityPoint pt;
                  pt.p = r.at("p");
                  pt.p_physical = r.at("p_physical");
                  pt.p_logical = r.at("p_logical");
                  pt.failures = uint64_t(r.at("failures"));
                  pt.eta = r.count("eta") ? r.at("eta") : 1.0;
                  pts.push_back(pt);
              }
              PseudothresholdEstimate est = pseudothreshold(pts);
              py::dict d;
              d["found"] = est.found;
              d["eta"] = est.eta;
              d["p_star_physical"] = est.p_star_physical;
              d["p_star_total"] = est.p_star_total;
              return d;
          });

    m.attr("__version__") = "0.1.0";
}
