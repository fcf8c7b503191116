#include "tetracode/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tetracode {

using json = nlohmann::ordered_json;

namespace {

json terms_to_json(const std::vector<PauliTerm>& terms) {
    json arr = json::array();
    for (const auto& t : terms) {
        json jt;
        jt["tetron"] = t.tetron;
        jt["pauli"] = std::string(1, pauli_char(t.pauli));
        jt["rep"] = t.rep == Rep::R ? "R" : "R'";
        arr.push_back(jt);
    }
    return arr;
}

std::vector<PauliTerm> terms_from_json(const json& arr) {
    std::vector<PauliTerm> terms;
    for (const auto& jt : arr) {
        PauliTerm t;
        t.tetron = jt.at("tetron").get<int>();
        t.pauli = pauli_from_char(jt.at("pauli").get<std::string>().at(0));
        std::string rep = jt.at("rep").get<std::string>();
        if (rep == "R") t.rep = Rep::R;
        else if (rep == "R'") t.rep = Rep::RPrime;
        else throw std::runtime_error("code file: bad rep flag: " + rep);
        terms.push_back(t);
    }
    return terms;
}

json support_to_json(const MajoranaOp& op) {
    json arr = json::array();
    for (std::size_t b : op.support().ones()) arr.push_back(b);
    return arr;
}

MajoranaOp support_from_json(const json& arr, int n_maj) {
    MajoranaOp op(n_maj);
    for (const auto& b : arr) op.flip(b.get<int>());
    return op;
}

} // namespace

std::string code_to_json(const FermionCode& code) {
    json j;
    j["format"] = "tetracode-code-v1";
    j["family"] = code.base.family;
    j["d_b"] = code.base.d_b;
    j["n_tetrons"] = code.n_tetrons();
    j["k"] = code.k;
    j["d_f"] = code.d_f;
    json pick = json::array();
    for (int g : code.pick) pick.push_back(g);
    j["pick_map"] = pick;
    json gens = json::array();
    for (const auto& g : code.generators) {
        json jg;
        jg["label"] = g.label;
        jg["set"] = g.set;
        jg["base_index"] = g.base_index;
        jg["pauli_terms"] = terms_to_json(g.terms);
        jg["support_bits"] = support_to_json(g.op);
        gens.push_back(jg);
    }
    j["generators"] = gens;
    json logs = json::array();
    for (std::size_t i = 0; i < code.logicals.size(); ++i) {
        json jl;
        jl["label"] = i < code.base.logicals.size() ? code.base.logicals[i].label : "L";
        jl["pauli_terms"] = terms_to_json(code.logical_terms[i]);
        jl["support_bits"] = support_to_json(code.logicals[i]);
        logs.push_back(jl);
    }
    j["logicals"] = logs;
    return j.dump(2) + "\n";
}

FermionCode code_from_json(const std::string& text, std::vector<std::string>* issues) {
    json j = json::parse(text);
    if (j.value("format", "") != "tetracode-code-v1")
        throw std::runtime_error("code file: unknown format tag");

    FermionCode code;
    int n = j.at("n_tetrons").get<int>();
    code.layout = TetronLayout(n);
    code.k = j.at("k").get<int>();
    code.d_f = j.at("d_f").get<int>();
    for (const auto& g : j.at("pick_map")) code.pick.push_back(g.get<int>());

    auto report = [&](const std::string& msg) {
        if (issues) issues->push_back(msg);
        else throw std::runtime_error(msg);
    };

    for (const auto& jg : j.at("generators")) {
        FermionGenerator g;
        g.label = jg.at("label").get<std::string>();
        g.set = jg.at("set").get<int>();
        g.base_index = jg.at("base_index").get<int>();
        g.terms = terms_from_json(jg.at("pauli_terms"));
        g.op = support_from_json(jg.at("support_bits"), code.layout.n_maj());
        MajoranaOp recomputed = pauli_string_to_majorana(g.terms, code.layout);
        if (recomputed != g.op)
            report("generator " + g.label + ": support_bits do not match pauli_terms");
        code.generators.push_back(std::move(g));
    }

    // rebuild the bosonic base from the set-0 rows
    code.base.family = j.at("family").get<std::string>();
    code.base.n = n;
    code.base.k = code.k;
    code.base.d_b = j.at("d_b").get<int>();
    for (const auto& g : code.generators) {
        if (g.set != 0) continue;
        PauliString s;
        s.label = g.label.substr(g.label.find(':') + 1);
        for (const auto& t : g.terms) s.terms.push_back({t.tetron, t.pauli});
        code.base.generators.push_back(std::move(s));
    }
    for (const auto& jl : j.at("logicals")) {
        std::vector<PauliTerm> terms = terms_from_json(jl.at("pauli_terms"));
        MajoranaOp op = support_from_json(jl.at("support_bits"), code.layout.n_maj());
        MajoranaOp recomputed = pauli_string_to_majorana(terms, code.layout);
        if (recomputed != op)
            report("logical " + jl.at("label").get<std::string>() +
                   ": support_bits do not match pauli_terms");
        PauliString s;
        s.label = jl.at("label").get<std::string>();
        for (const auto& t : terms) s.terms.push_back({t.tetron, t.pauli});
        code.base.logicals.push_back(std::move(s));
        code.logical_terms.push_back(std::move(terms));
        code.logicals.push_back(std::move(op));
    }

    code.build_stabilizer_basis();
    return code;
}

void save_code(const FermionCode& code, const std::string& path) {
    write_text_file(path, code_to_json(code));
}

FermionCode load_code(const std::string& path, std::vector<std::string>* issues) {
    return code_from_json(read_text_file(path), issues);
}

std::string schedule_to_json(const FermionCode& code, const Schedule& sched) {
    json j;
    j["format"] = "tetracode-schedule-v1";
    j["code"] = code.params_str();
    j["latency"] = sched.latency();
    json rounds = json::array();
    for (const auto& r : sched.rounds) {
        json jr;
        jr["phase"] = r.phase;
        json gens = json::array();
        for (int g : r.gens) gens.push_back(code.generators[std::size_t(g)].label);
        jr["generators"] = gens;
        rounds.push_back(jr);
    }
    j["rounds"] = rounds;
    return j.dump(2) + "\n";
}

Schedule schedule_from_json(const FermionCode& code, const std::string& text) {
    json j = json::parse(text);
    if (j.value("format", "") != "tetracode-schedule-v1")
        throw std::runtime_error("schedule file: unknown format tag");
    Schedule sched;
    for (const auto& jr : j.at("rounds")) {
        Schedule::Round r;
        r.phase = jr.at("phase").get<std::string>();
        for (const auto& jl : jr.at("generators")) {
            std::string label = jl.get<std::string>();
            int found = -1;
            for (int g = 0; g < code.n_generators(); ++g)
                if (code.generators[std::size_t(g)].label == label) { found = g; break; }
            if (found < 0) throw std::runtime_error("schedule file: unknown generator " + label);
            r.gens.push_back(found);
        }
        sched.rounds.push_back(std::move(r));
    }
    return sched;
}

std::string schedule_table(const FermionCode& code, const Schedule& sched) {
    std::ostringstream out;
    out << "round  phase    generators (tetron support)\n";
    for (std::size_t r = 0; r < sched.rounds.size(); ++r) {
        const auto& round = sched.rounds[r];
        out << "  " << r + 1 << "\t" << round.phase << "\t";
        for (std::size_t i = 0; i < round.gens.size(); ++i) {
            if (i) out << ", ";
            out << code.generators[std::size_t(round.gens[i])].label << " {";
            auto supp = tetron_support(code, round.gens[i]);
            for (std::size_t k = 0; k < supp.size(); ++k)
                out << (k ? "," : "") << supp[k];
            out << "}";
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

VerifyReport verify_fermion_code(const FermionCode& code, int w_max, uint64_t budget,
                                 const std::vector<std::string>& load_issues) {
    VerifyReport rep;
    for (const auto& issue : load_issues) rep.fail(issue);

    const int n = code.n_tetrons();

    // encoding consistency + even weights
    for (const auto& g : code.generators) {
        if (pauli_string_to_majorana(g.terms, code.layout) != g.op)
            rep.fail("generator " + g.label + ": terms and support disagree");
        if (!g.op.even_weight())
            rep.fail("generator " + g.label + ": odd weight");
    }
    // pairwise commutation
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        for (std::size_t j = i + 1; j < code.generators.size(); ++j)
            if (!commutes(code.generators[i].op, code.generators[j].op))
                rep.fail("generators " + code.generators[i].label + " and " +
                         code.generators[j].label + " anticommute");
    // rank
    std::vector<MajoranaOp> ops;
    for (const auto& g : code.generators) ops.push_back(g.op);
    int rank = f2_rank_of(ops);
    int want = 2 * n - code.k;
    if (rank != want)
        rep.fail("rank " + std::to_string(rank) + " != 2n-k = " + std::to_string(want));
    // tetron membership
    for (int q = 1; q <= n; ++q)
        if (!code.in_stabilizer_group(tetron_op(q, code.layout)))
            rep.fail("tetron operator " + std::to_string(q) + " outside the stabilizer group");
    // every single-MZM error must be visible
    for (int b = 0; b < code.n_maj(); ++b) {
        MajoranaOp e(code.n_maj());
        e.flip(b);
        if (!code.syndrome(e).any())
            rep.fail("single-MZM error g" + std::to_string(b) + " has zero syndrome");
    }
    // logicals
    if (code.logicals.size() != std::size_t(3 * code.k))
        rep.fail("expected 3k logicals");
    for (std::size_t i = 0; i < code.logicals.size(); ++i)
        for (const auto& g : code.generators)
            if (!commutes(code.logicals[i], g.op))
                rep.fail("logical " + std::to_string(i) + " anticommutes with " + g.label);
    for (int i = 0; i + 2 < int(code.logicals.size()); i += 3) {
        if (commutes(code.logicals[std::size_t(i)], code.logicals[std::size_t(i + 2)]))
            rep.fail("X and Z logicals of qubit " + std::to_string(i / 3 + 1) + " commute");
        if (code.in_stabilizer_group(code.logicals[std::size_t(i)]))
            rep.fail("X logical lies in the stabilizer group");
    }

    // distance exhaustion when the budget allows
    if (w_max <= 0) {
        rep.notes.push_back("distance unchecked (w_max = 0)");
    } else if (min_logical_weight_cost(code.n_maj(), w_max) > budget) {
        rep.notes.push_back("distance unchecked (enumeration exceeds budget)");
    } else {
        DistanceResult dr = min_logical_weight(code, w_max, budget);
        rep.distance_checked = true;
        if (dr.found) {
            rep.checked_distance = dr.value;
            if (dr.value < code.d_f)
                rep.fail("found logical of weight " + std::to_string(dr.value) +
                         " < claimed d_f = " + std::to_string(code.d_f));
        } else {
            rep.notes.push_back("no logical of weight <= " + std::to_string(w_max));
            if (w_max >= code.d_f)
                rep.fail("claimed d_f = " + std::to_string(code.d_f) +
                         " but no logical found up to " + std::to_string(w_max));
        }
    }
    return rep;
}

} // namespace tetracode
