#pragma once

#include "flopcheck/types.hpp"

namespace flopcheck {

/// Runtime knobs.  Loaded from the TOML file named by FLOPCHECK_CONFIG, or
/// defaults when unset; the acceptance thresholds themselves are fixed in
/// code, not here.
struct Config {
    Int lemma_window = 6;   // window for the all-integers vanishing families
    Int mukai_max_n = 6;    // verify --all replays Mukai(2..mukai_max_n)
    Int std_max_n = 6;      // verify --all replays Std(1..std_max_n)
    int weyl_rank_cap = 8;  // exhaustive Weyl enumeration cap
    int workers = 0;        // verify --all worker threads; 0 = hardware
    std::string data_dir;

    static Config load();
    static Config load_file(const std::string& path);
};

}  // namespace flopcheck
