#pragma once

#include "flopcheck/lemmas.hpp"
#include "flopcheck/mutation.hpp"

namespace flopcheck {

struct CaseReport {
    std::string case_name;
    int n = 0;
    bool pass = false;
    bool lemmas_pass = false;
    std::vector<LemmaResult> lemmas;
    bool script_ran = false;
    ScriptReport script;
    double seconds = 0.0;
};

struct VerifyOptions {
    bool only_lemmas = false;
    bool only_script = false;
};

CaseReport verify_case(const FlopCase& c, const VerifyOptions& opt = {});

/// Run every catalog case (C2, AG4, Mukai(2..max), Std(1..max)) on worker
/// threads and return the reports sorted by case name.
std::vector<CaseReport> verify_all(const Config& cfg, const VerifyOptions& opt = {});

}  // namespace flopcheck
