#include "flopcheck/config.hpp"

#include "flopcheck/toml_lite.hpp"

#include <cstdlib>

namespace flopcheck {

Config Config::load_file(const std::string& path) {
    Config c;
    c.data_dir = FLOPCHECK_DATA_DIR;
    if (path.empty()) return c;
    TomlValue t = toml_parse_file(path);
    if (t.has("lemma_window")) c.lemma_window = t.at("lemma_window").as_int();
    if (t.has("mukai_max_n")) c.mukai_max_n = t.at("mukai_max_n").as_int();
    if (t.has("std_max_n")) c.std_max_n = t.at("std_max_n").as_int();
    if (t.has("weyl_rank_cap")) c.weyl_rank_cap = static_cast<int>(t.at("weyl_rank_cap").as_int());
    if (t.has("workers")) c.workers = static_cast<int>(t.at("workers").as_int());
    if (t.has("data_dir")) c.data_dir = t.at("data_dir").as_str();
    return c;
}

Config Config::load() {
    const char* env = std::getenv("FLOPCHECK_CONFIG");
    return load_file(env ? std::string(env) : std::string());
}

}  // namespace flopcheck
