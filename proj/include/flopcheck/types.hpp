#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace flopcheck {

using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Lexicographic order on integer vectors; shorter vectors sort first.
struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline bool vec_eq(const Vec& a, const Vec& b) {
    return a.size() == b.size() && a == b;
}

inline Vec vec_of(std::initializer_list<Int> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (Int x : xs) v[i++] = x;
    return v;
}

inline Vec vec_from(const std::vector<Int>& xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
    return v;
}

inline Vec concat(const Vec& a, const Vec& b) {
    Vec v(a.size() + b.size());
    v << a, b;
    return v;
}

inline std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

/// Finitely supported Int-valued function keyed by integer vectors.
/// Used for Laurent-polynomial characters and (virtual) direct sums alike.
using VecMap = std::map<Vec, Int, VecLess>;

inline void vecmap_add(VecMap& m, const Vec& k, Int c) {
    if (c == 0) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

}  // namespace flopcheck
