#include "flopcheck/toml_lite.hpp"

#include <cctype>
#include <fstream>

namespace flopcheck {

const TomlValue& TomlValue::at(const std::string& key) const {
    auto it = tab.find(key);
    if (it == tab.end()) throw std::runtime_error("toml: missing key '" + key + "'");
    return it->second;
}

const TomlValue& TomlValue::at_or(const std::string& key, const TomlValue& fallback) const {
    auto it = tab.find(key);
    return it == tab.end() ? fallback : it->second;
}

Int TomlValue::as_int() const {
    if (kind != Kind::Int) throw std::runtime_error("toml: expected integer");
    return i;
}

bool TomlValue::as_bool() const {
    if (kind != Kind::Bool) throw std::runtime_error("toml: expected boolean");
    return b;
}

const std::string& TomlValue::as_str() const {
    if (kind != Kind::String) throw std::runtime_error("toml: expected string");
    return s;
}

const std::vector<TomlValue>& TomlValue::as_array() const {
    if (kind != Kind::Array) throw std::runtime_error("toml: expected array");
    return arr;
}

Vec TomlValue::as_vec() const {
    const auto& a = as_array();
    Vec v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) v[static_cast<Eigen::Index>(k)] = a[k].as_int();
    return v;
}

std::vector<std::string> TomlValue::as_strings() const {
    std::vector<std::string> out;
    for (const auto& e : as_array()) out.push_back(e.as_str());
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    const std::string& where;
    std::size_t pos = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error(where + ":" + std::to_string(line) + ": " + msg);
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char get() {
        char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }

    void skip_ws(bool newlines) {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                get();
            } else {
                break;
            }
        }
    }

    std::string bare_key() {
        std::string k;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                          peek() == '-' || peek() == '+'))
            k += get();
        if (k.empty()) fail("expected key");
        return k;
    }

    std::string string_value() {
        if (get() != '"') fail("expected string");
        std::string s;
        while (!eof()) {
            char c = get();
            if (c == '"') return s;
            if (c == '\\') {
                if (eof()) fail("dangling escape");
                char e = get();
                switch (e) {
                    case 'n': s += '\n'; break;
                    case 't': s += '\t'; break;
                    case '"': s += '"'; break;
                    case '\\': s += '\\'; break;
                    default: fail("unsupported escape");
                }
            } else if (c == '\n') {
                fail("newline in string");
            } else {
                s += c;
            }
        }
        fail("unterminated string");
    }

    TomlValue value() {
        skip_ws(false);
        if (eof()) fail("expected value");
        char c = peek();
        TomlValue v;
        if (c == '"') {
            v.kind = TomlValue::Kind::String;
            v.s = string_value();
            return v;
        }
        if (c == '[') {
            get();
            v.kind = TomlValue::Kind::Array;
            skip_ws(true);
            while (!eof() && peek() != ']') {
                v.arr.push_back(value());
                skip_ws(true);
                if (!eof() && peek() == ',') {
                    get();
                    skip_ws(true);
                }
            }
            if (eof()) fail("unterminated array");
            get();
            return v;
        }
        if (c == '{') {
            get();
            v.kind = TomlValue::Kind::Table;
            skip_ws(false);
            while (!eof() && peek() != '}') {
                std::string k = bare_key();
                skip_ws(false);
                if (eof() || get() != '=') fail("expected '=' in inline table");
                v.tab[k] = value();
                skip_ws(false);
                if (!eof() && peek() == ',') {
                    get();
                    skip_ws(false);
                }
            }
            if (eof()) fail("unterminated inline table");
            get();
            return v;
        }
        if (c == 't' || c == 'f') {
            std::string k = bare_key();
            if (k == "true") {
                v.kind = TomlValue::Kind::Bool;
                v.b = true;
                return v;
            }
            if (k == "false") {
                v.kind = TomlValue::Kind::Bool;
                v.b = false;
                return v;
            }
            fail("unknown literal '" + k + "'");
        }
        // integer
        std::string num;
        if (c == '+' || c == '-') num += get();
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) num += get();
        if (num.empty() || num == "+" || num == "-") fail("expected value");
        v.kind = TomlValue::Kind::Int;
        v.i = std::stoll(num);
        return v;
    }
};

}  // namespace

TomlValue toml_parse(const std::string& text, const std::string& where) {
    TomlValue root;
    Parser p{text, where};
    TomlValue* current = &root;
    for (;;) {
        p.skip_ws(true);
        if (p.eof()) break;
        if (p.peek() == '[') {
            p.get();
            bool array_table = !p.eof() && p.peek() == '[';
            if (array_table) p.get();
            p.skip_ws(false);
            std::string name = p.bare_key();
            std::vector<std::string> path{name};
            p.skip_ws(false);
            while (!p.eof() && p.peek() == '.') {
                p.get();
                p.skip_ws(false);
                path.push_back(p.bare_key());
                p.skip_ws(false);
            }
            if (p.eof() || p.get() != ']') p.fail("expected ']'");
            if (array_table && (p.eof() || p.get() != ']')) p.fail("expected ']]'");
            TomlValue* node = &root;
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                TomlValue& child = node->tab[path[k]];
                if (child.kind == TomlValue::Kind::Array) {
                    if (child.arr.empty()) p.fail("empty array table");
                    node = &child.arr.back();
                } else {
                    child.kind = TomlValue::Kind::Table;
                    node = &child;
                }
            }
            TomlValue& slot = node->tab[path.back()];
            if (array_table) {
                slot.kind = TomlValue::Kind::Array;
                slot.arr.emplace_back();
                slot.arr.back().kind = TomlValue::Kind::Table;
                current = &slot.arr.back();
            } else {
                slot.kind = TomlValue::Kind::Table;
                current = &slot;
            }
            continue;
        }
        std::string key = p.bare_key();
        p.skip_ws(false);
        if (p.eof() || p.get() != '=') p.fail("expected '='");
        current->tab[key] = p.value();
    }
    return root;
}

TomlValue toml_parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return toml_parse(text, path);
}

}  // namespace flopcheck
