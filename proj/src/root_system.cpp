#include "flopcheck/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

namespace flopcheck {

namespace {

IMat cartan_matrix(Family f, int rank) {
    IMat m = IMat::Zero(rank, rank);
    for (int i = 0; i < rank; ++i) m(i, i) = 2;
    for (int i = 0; i + 1 < rank; ++i) {
        m(i, i + 1) = -1;
        m(i + 1, i) = -1;
    }
    if (f == Family::C) {
        // last node long: <alpha_{n-1}, alpha_{n-2}^vee> = -2
        m(rank - 2, rank - 1) = -2;
    }
    return m;
}

}  // namespace

RootSystem RootSystem::make(Family f, int rank) {
    if (rank < 1 || (f == Family::C && rank < 2))
        throw std::invalid_argument("root system rank out of range");
    RootSystem rs;
    rs.family = f;
    rs.rank = rank;
    rs.cartan = cartan_matrix(f, rank);

    // Closure of the simple roots under simple reflections, tracking the
    // coroot in simple-coroot coordinates alongside.
    std::map<Vec, Vec, VecLess> seen;  // root_sc -> coroot_sc
    std::deque<std::pair<Vec, Vec>> queue;
    for (int i = 0; i < rank; ++i) {
        Vec c = Vec::Zero(rank);
        c[i] = 1;
        seen.emplace(c, c);
        queue.emplace_back(c, c);
    }
    while (!queue.empty()) {
        auto [c, d] = queue.front();
        queue.pop_front();
        for (int j = 0; j < rank; ++j) {
            // <root, alpha_j^vee> = sum_i c_i cartan(j, i)
            Int p = 0, q = 0;
            for (int i = 0; i < rank; ++i) {
                p += c[i] * rs.cartan(j, i);
                q += d[i] * rs.cartan(i, j);  // <alpha_j, coroot>
            }
            Vec c2 = c;
            c2[j] -= p;
            if ((c2.array() < 0).any()) continue;
            if (seen.count(c2)) continue;
            Vec d2 = d;
            d2[j] -= q;
            seen.emplace(c2, d2);
            queue.emplace_back(c2, d2);
        }
    }
    for (const auto& [c, d] : seen) {
        PosRoot r;
        r.root_sc = c;
        r.coroot_sc = d;
        r.fund = rs.cartan * c;
        rs.positive.push_back(std::move(r));
    }
    const std::size_t expect = (f == Family::A)
                                   ? std::size_t(rank) * (rank + 1) / 2
                                   : std::size_t(rank) * rank;
    if (rs.positive.size() != expect)
        throw std::logic_error("positive root closure produced wrong count");
    return rs;
}

std::optional<std::size_t> RootSystem::find_root(const Vec& root_sc) const {
    for (std::size_t i = 0; i < positive.size(); ++i)
        if (vec_eq(positive[i].root_sc, root_sc)) return i;
    return std::nullopt;
}

Int RootSystem::weyl_order() const {
    Int w = 1;
    if (family == Family::A) {
        for (int i = 2; i <= rank + 1; ++i) w *= i;
    } else {
        for (int i = 1; i <= rank; ++i) w *= 2 * i;
    }
    return w;
}

namespace {

DotNormalForm walk(const RootSystem& rs, const Vec& lambda,
                   const std::vector<int>& nodes) {
    DotNormalForm out;
    Vec v = lambda + rs.rho();
    std::vector<int> word;
    for (;;) {
        int neg = -1;
        for (int i : nodes) {
            if (v[i] == 0) return out;  // fixed by s_i: singular
            if (v[i] < 0 && neg < 0) neg = i;
        }
        if (neg < 0) break;
        v = rs.reflect(v, neg);
        word.push_back(neg);
    }
    out.singular = false;
    // w = product of the recorded reflections, latest applied last; store in
    // composition order so apply_word(word, lambda + rho) reproduces v.
    std::reverse(word.begin(), word.end());
    out.word = std::move(word);
    out.length = static_cast<int>(out.word.size());
    out.dominant = v - rs.rho();
    return out;
}

}  // namespace

DotNormalForm make_dominant(const RootSystem& rs, const Vec& lambda) {
    std::vector<int> all(rs.rank);
    for (int i = 0; i < rs.rank; ++i) all[i] = i;
    return walk(rs, lambda, all);
}

DotNormalForm make_dominant_relative(const RootSystem& rs, const Vec& lambda,
                                     const std::vector<int>& nodes) {
    return walk(rs, lambda, nodes);
}

Vec apply_word(const RootSystem& rs, const std::vector<int>& word, Vec v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = rs.reflect(v, *it);
    return v;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, int rank_cap) {
    if (rs.rank > rank_cap)
        throw std::invalid_argument("enumerate_weyl: rank exceeds cap");
    std::vector<WeylElement> out;
    std::map<Vec, int, VecLess> seen;  // w(rho) -> index in out
    std::deque<std::pair<Vec, int>> queue;
    Vec rho = rs.rho();
    out.push_back(WeylElement{});
    seen.emplace(rho, 0);
    queue.emplace_back(rho, 0);
    while (!queue.empty()) {
        auto [v, idx] = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            Vec v2 = rs.reflect(v, i);
            if (seen.count(v2)) continue;
            WeylElement w;
            w.word.push_back(i);
            w.word.insert(w.word.end(), out[idx].word.begin(), out[idx].word.end());
            w.length = out[idx].length + 1;
            out.push_back(std::move(w));
            int id = static_cast<int>(out.size()) - 1;
            seen.emplace(v2, id);
            queue.emplace_back(v2, id);
        }
    }
    return out;
}

namespace {

void factor_into(std::map<Int, Int>& expo, Int n, Int sign) {
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            expo[p] += sign;
            n /= p;
        }
    }
    if (n > 1) expo[n] += sign;
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const Vec& lam) {
    for (int i = 0; i < rs.rank; ++i)
        if (lam[i] < 0) throw std::invalid_argument("weyl_dim: non-dominant weight");
    Vec lr = lam + rs.rho();
    Vec r = rs.rho();
    std::map<Int, Int> expo;
    for (const auto& root : rs.positive) {
        factor_into(expo, rs.pair_coroot(lr, root), +1);
        factor_into(expo, rs.pair_coroot(r, root), -1);
    }
    Int d = 1;
    for (const auto& [p, e] : expo) {
        if (e < 0) throw std::logic_error("weyl_dim: non-integral result");
        for (Int k = 0; k < e; ++k) d *= p;
    }
    return d;
}

Vec eps_lift(const RootSystem& rs, const Vec& fund) {
    if (rs.family == Family::A) {
        // omega_i = e_1 + ... + e_i; pick the lift with last entry 0.
        Vec v = Vec::Zero(rs.rank + 1);
        Int acc = 0;
        for (int i = rs.rank - 1; i >= 0; --i) {
            acc += fund[i];
            v[i] = acc;
        }
        return v;
    }
    // type C: omega_i = e_1 + ... + e_i exactly
    Vec v = Vec::Zero(rs.rank);
    Int acc = 0;
    for (int i = rs.rank - 1; i >= 0; --i) {
        acc += fund[i];
        v[i] = acc;
    }
    return v;
}

Vec eps_to_fund(const RootSystem& rs, const Vec& eps) {
    Vec f = Vec::Zero(rs.rank);
    if (rs.family == Family::A) {
        for (int i = 0; i < rs.rank; ++i) f[i] = eps[i] - eps[i + 1];
        return f;
    }
    for (int i = 0; i + 1 < rs.rank; ++i) f[i] = eps[i] - eps[i + 1];
    f[rs.rank - 1] = eps[rs.rank - 1];
    return f;
}

}  // namespace flopcheck
