#include "flopcheck/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace flopcheck {

const NamedBundle& FlopCase::bundle(const std::string& key) const {
    return dict.at(static_cast<std::size_t>(bundle_index(key)));
}

int FlopCase::bundle_index(const std::string& key) const {
    auto it = dict_index.find(key);
    if (it == dict_index.end())
        throw std::invalid_argument("unknown bundle '" + key + "' in case " + name);
    return it->second;
}

ObjExpr FlopCase::dual_expr(const ObjExpr& e) const {
    ObjExpr d;
    d.th = -e.th;
    d.tH = -e.tH;
    for (int f : e.factors) d.factors.push_back(bundle_index(dict[static_cast<std::size_t>(f)].dual_key));
    std::sort(d.factors.begin(), d.factors.end());
    return d;
}

ObjExpr FlopCase::product_expr(const ObjExpr& a, const ObjExpr& b) const {
    ObjExpr p;
    p.th = a.th + b.th;
    p.tH = a.tH + b.tH;
    p.factors = a.factors;
    p.factors.insert(p.factors.end(), b.factors.begin(), b.factors.end());
    std::sort(p.factors.begin(), p.factors.end());
    return p;
}

FObject FlopCase::twist_object(const FObject& o, Int a, Int b) const {
    FObject t = o;
    for (auto& term : t.terms) {
        term.expr.th += a;
        term.expr.tH += b;
    }
    return t;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t p = 0;
    bool eof() const { return p >= s.size(); }
    char peek() const { return s[p]; }
    char get() { return s[p++]; }
    void ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++p;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("descriptor '" + s + "': " + msg);
    }
    Int integer() {
        ws();
        std::string t;
        if (!eof() && (peek() == '-' || peek() == '+')) t += get();
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) t += get();
        if (t.empty() || t == "-" || t == "+") fail("expected integer");
        return std::stoll(t);
    }
};

// twist body, already inside parens: either "a,b" or a combination of h/H
// terms such as "h", "-h+H", "2h-3H", "-2H".
std::pair<Int, Int> parse_twist(Cursor& c) {
    c.ws();
    // Try symbolic form first: it never contains a comma.
    std::size_t save = c.p;
    bool symbolic = false;
    for (std::size_t q = c.p; q < c.s.size() && c.s[q] != ')'; ++q) {
        if (c.s[q] == 'h' || c.s[q] == 'H') symbolic = true;
        if (c.s[q] == ',') {
            symbolic = false;
            break;
        }
    }
    Int a = 0, b = 0;
    if (symbolic) {
        bool first = true;
        for (;;) {
            c.ws();
            if (c.eof() || c.peek() == ')') break;
            Int sign = 1;
            if (c.peek() == '+') {
                c.get();
            } else if (c.peek() == '-') {
                sign = -1;
                c.get();
            } else if (!first) {
                c.fail("expected sign between twist terms");
            }
            c.ws();
            Int coef = 1;
            if (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
                std::string t;
                while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) t += c.get();
                coef = std::stoll(t);
            }
            c.ws();
            if (c.eof()) c.fail("dangling twist term");
            char v = c.get();
            if (v == 'h')
                a += sign * coef;
            else if (v == 'H')
                b += sign * coef;
            else
                c.fail("expected h or H");
            first = false;
        }
        return {a, b};
    }
    c.p = save;
    a = c.integer();
    c.ws();
    if (c.eof() || c.get() != ',') c.fail("expected ','");
    b = c.integer();
    c.ws();
    return {a, b};
}

}  // namespace

FObject parse_object(const FlopCase& cs, const std::string& text) {
    Cursor c{text};
    c.ws();
    std::string namepart;
    while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
        namepart += c.get();
    if (namepart.empty()) c.fail("expected bundle name");

    FTerm term;
    if (namepart != "O") term.expr.factors.push_back(cs.bundle_index(namepart));

    c.ws();
    if (!c.eof() && c.peek() == '(') {
        c.get();
        auto [a, b] = parse_twist(c);
        if (c.eof() || c.get() != ')') c.fail("expected ')'");
        term.expr.th = a;
        term.expr.tH = b;
    }
    c.ws();
    if (!c.eof() && c.peek() == '[') {
        c.get();
        term.shift = static_cast<int>(c.integer());
        c.ws();
        if (c.eof() || c.get() != ']') c.fail("expected ']'");
    }
    c.ws();
    if (!c.eof()) c.fail("trailing characters");
    return FObject{{term}};
}

std::string FlopCase::show(const FObject& o) const {
    std::string out;
    for (std::size_t t = 0; t < o.terms.size(); ++t) {
        const FTerm& term = o.terms[t];
        if (t) out += " + ";
        std::string base;
        for (int f : term.expr.factors) {
            if (!base.empty()) base += "*";
            base += dict[static_cast<std::size_t>(f)].key;
        }
        if (base.empty()) base = "O";
        out += base;
        if (term.expr.th != 0 || term.expr.tH != 0)
            out += "(" + std::to_string(term.expr.th) + "," + std::to_string(term.expr.tH) + ")";
        if (term.shift != 0) out += "[" + std::to_string(term.shift) + "]";
        if (term.mult != 1) out += "^" + std::to_string(term.mult);
    }
    return out.empty() ? "0" : out;
}

std::string FlopCase::signature(const FObject& o) const {
    // Per term: fold the line twist into the per-side source labels so that
    // twist-equivalent names (S_dual vs S(h), Qt(h+H) vs Qt_dual(h+2H)) agree.
    std::vector<std::string> sigs;
    for (const FTerm& term : o.terms) {
        Vec total_p = Vec::Zero(g.total_rank());
        Vec total_q = Vec::Zero(g.total_rank());
        bool has_p = false, has_q = false;
        for (int f : term.expr.factors) {
            const NamedBundle& nb = dict[static_cast<std::size_t>(f)];
            if (nb.side == Side::P) {
                total_p += nb.nu_source;
                has_p = true;
            } else {
                total_q += nb.nu_source;
                has_q = true;
            }
        }
        Vec tw = line_weight(term.expr.th, term.expr.tH);
        std::string s;
        if (has_p && has_q) {
            s = "P" + to_string(total_p) + "Q" + to_string(total_q) + "L" + to_string(tw);
        } else if (has_p) {
            s = "P" + to_string(Vec(total_p + tw));
        } else if (has_q) {
            s = "Q" + to_string(Vec(total_q + tw));
        } else {
            s = "L" + to_string(tw);
        }
        s += "x" + std::to_string(term.mult);
        sigs.push_back(s);
    }
    std::sort(sigs.begin(), sigs.end());
    std::string out;
    for (const auto& s : sigs) out += s + ";";
    return out;
}

std::string FlopCase::rep_display(const Vec& mu) const {
    auto it = rep_names.find(mu);
    if (it != rep_names.end()) return it->second;
    if (mu.isZero()) return "k";
    return "L" + to_string(mu);
}

std::string FlopCase::grep_display(const HomogeneousSpace& X, const GRepSum& r) const {
    if (r.empty()) return "0";
    std::string out;
    for (const auto& [mu, m] : r) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += std::to_string(m) + "*";
        out += rep_display(mu) + " (dim " + std::to_string(X.irrep_dim(mu)) + ")";
    }
    return out;
}

}  // namespace flopcheck
