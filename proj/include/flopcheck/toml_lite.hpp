#pragma once

#include "flopcheck/types.hpp"

#include <stdexcept>

namespace flopcheck {

/// Minimal TOML reader covering the subset the data files use: comments,
/// bare keys, [tables], [[arrays of tables]], strings, integers, booleans,
/// arrays (possibly spanning lines) and inline tables.  Strict: anything
/// outside the subset is a parse error.
struct TomlValue {
    enum class Kind { Int, Bool, String, Array, Table };
    Kind kind = Kind::Table;
    Int i = 0;
    bool b = false;
    std::string s;
    std::vector<TomlValue> arr;
    std::map<std::string, TomlValue> tab;

    bool has(const std::string& key) const { return tab.count(key) != 0; }
    const TomlValue& at(const std::string& key) const;
    const TomlValue& at_or(const std::string& key, const TomlValue& fallback) const;

    Int as_int() const;
    bool as_bool() const;
    const std::string& as_str() const;
    const std::vector<TomlValue>& as_array() const;

    Vec as_vec() const;                       // array of ints
    std::vector<std::string> as_strings() const;  // array of strings
};

TomlValue toml_parse(const std::string& text, const std::string& where = "<toml>");
TomlValue toml_parse_file(const std::string& path);

}  // namespace flopcheck
