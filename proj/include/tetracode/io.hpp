#pragma once

#include <string>
#include <vector>

#include "tetracode/fermion.hpp"
#include "tetracode/scheduler.hpp"

namespace tetracode {

/// Code file: layout, generators as Pauli-with-rep terms plus raw MZM
/// supports, logicals, parameters and the pick map. The raw supports make a
/// file self-validating; `code_from_json` records any term/support mismatch
/// in `issues` (or throws when `issues` is null).
std::string code_to_json(const FermionCode& code);
FermionCode code_from_json(const std::string& text, std::vector<std::string>* issues = nullptr);
void save_code(const FermionCode& code, const std::string& path);
FermionCode load_code(const std::string& path, std::vector<std::string>* issues = nullptr);

std::string schedule_to_json(const FermionCode& code, const Schedule& sched);
Schedule schedule_from_json(const FermionCode& code, const std::string& text);

/// Per-round tetron usage table for terminal display.
std::string schedule_table(const FermionCode& code, const Schedule& sched);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Structured verification of a constructed or loaded code.
struct VerifyReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    int checked_distance = 0;      // 0 when the distance step was skipped
    bool distance_checked = false;

    void fail(const std::string& msg) {
        pass = false;
        failures.push_back(msg);
    }
};

/// Runs encoding consistency, weights, commutation, rank, tetron membership,
/// single-MZM syndromes, logical checks, and (budget permitting) distance
/// exhaustion against the claimed d_f.
VerifyReport verify_fermion_code(const FermionCode& code, int w_max,
                                 uint64_t budget = 500'000'000,
                                 const std::vector<std::string>& load_issues = {});

} // namespace tetracode
