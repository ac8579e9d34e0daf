#pragma once

#include "flopcheck/hom_v.hpp"

namespace flopcheck {

struct LemmaResult {
    std::string id;
    std::string desc;
    bool pass = false;
    std::string detail;
};

LemmaResult run_lemma(const FlopCase& c, const LemmaItem& item);
std::vector<LemmaResult> run_lemma_suite(const FlopCase& c);

}  // namespace flopcheck
