#include "flopcheck/bbw.hpp"

#include <algorithm>
#include <mutex>

namespace flopcheck {

const char* to_string(Certificate c) {
    switch (c) {
        case Certificate::EulerOnly: return "EulerOnly";
        case Certificate::Exact: return "Exact";
        case Certificate::VanishingCertified: return "VanishingCertified";
    }
    return "?";
}

DotResult dotted_normalize(const GroupSpec& g, const Vec& lambda) {
    DotResult out;
    out.mu = Vec::Zero(g.total_rank());
    out.degree = 0;
    int off = 0;
    for (const auto& rs : g.factors) {
        Vec part = lambda.segment(off, rs.rank);
        DotNormalForm nf = make_dominant(rs, part);
        if (nf.singular) return out;  // singular overall
        out.degree += nf.length;
        out.mu.segment(off, rs.rank) = nf.dominant;
        off += rs.rank;
    }
    out.singular = false;
    return out;
}

bool HomogeneousSpace::is_crossed(std::size_t f, int node) const {
    const auto& c = crossed[f];
    return std::binary_search(c.begin(), c.end(), node);
}

std::vector<int> HomogeneousSpace::levi_nodes(std::size_t f) const {
    std::vector<int> out;
    for (int i = 0; i < g.factors[f].rank; ++i)
        if (!is_crossed(f, i)) out.push_back(i);
    return out;
}

HomogeneousSpace HomogeneousSpace::make(GroupSpec gs, std::vector<std::vector<int>> crossed) {
    HomogeneousSpace X;
    X.g = std::move(gs);
    X.crossed = std::move(crossed);
    for (auto& c : X.crossed) std::sort(c.begin(), c.end());
    if (X.crossed.size() != X.g.factors.size())
        throw std::invalid_argument("HomogeneousSpace: crossed sets per factor mismatch");

    X.omega = Vec::Zero(X.g.total_rank());
    X.dim = 0;
    int off = 0;
    for (std::size_t f = 0; f < X.g.factors.size(); ++f) {
        const auto& rs = X.g.factors[f];
        for (const auto& root : rs.positive) {
            bool outside = false;
            for (int c : X.crossed[f])
                if (root.root_sc[c] != 0) outside = true;
            if (outside) {
                X.dim += 1;
                X.omega.segment(off, rs.rank) -= root.fund;
            }
        }
        // GL blocks on the epsilon line, cut at the crossed nodes.  A type-C
        // factor whose last node stays uncrossed keeps a symplectic tail,
        // which is not a GL block; block arithmetic is then unavailable.
        const int line = rs.family == Family::A ? rs.rank + 1 : rs.rank;
        int prev = 0;
        for (int c : X.crossed[f]) {
            X.levi.blocks.push_back(c + 1 - prev);
            prev = c + 1;
        }
        if (rs.family == Family::C && !X.is_crossed(f, rs.rank - 1)) X.gl_pure = false;
        if (prev < line) X.levi.blocks.push_back(line - prev);
        off += rs.rank;
    }
    return X;
}

bool HomogeneousSpace::levi_dominant(const Vec& nu) const {
    int off = 0;
    for (std::size_t f = 0; f < g.factors.size(); ++f) {
        for (int i = 0; i < g.factors[f].rank; ++i)
            if (!is_crossed(f, i) && nu[off + i] < 0) return false;
        off += g.factors[f].rank;
    }
    return true;
}

Vec HomogeneousSpace::to_blocks(const Vec& nu) const {
    if (!gl_pure) throw std::logic_error("to_blocks: Levi has a symplectic tail");
    Vec out(levi.total());
    int off = 0, boff = 0;
    for (const auto& rs : g.factors) {
        Vec eps = eps_lift(rs, nu.segment(off, rs.rank));
        out.segment(boff, eps.size()) = eps;
        boff += static_cast<int>(eps.size());
        off += rs.rank;
    }
    return out;
}

Vec HomogeneousSpace::from_blocks(const Vec& blocks) const {
    Vec out(g.total_rank());
    int off = 0, boff = 0;
    for (const auto& rs : g.factors) {
        const int line = rs.family == Family::A ? rs.rank + 1 : rs.rank;
        Vec eps = blocks.segment(boff, line);
        out.segment(off, rs.rank) = eps_to_fund(rs, eps);
        boff += line;
        off += rs.rank;
    }
    return out;
}

Int HomogeneousSpace::levi_dim(const Vec& nu) const {
    if (!levi_dominant(nu))
        throw std::invalid_argument("levi_dim: weight not Levi-dominant");
    // Weyl dimension formula over the roots of the Levi, factor by factor.
    std::map<Int, Int> expo;
    auto factor_into = [&expo](Int n, Int sign) {
        for (Int p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                expo[p] += sign;
                n /= p;
            }
        if (n > 1) expo[n] += sign;
    };
    int off = 0;
    for (std::size_t f = 0; f < g.factors.size(); ++f) {
        const auto& rs = g.factors[f];
        Vec lr = nu.segment(off, rs.rank) + rs.rho();
        Vec r = rs.rho();
        for (const auto& root : rs.positive) {
            bool inside = true;
            for (int c : crossed[f])
                if (root.root_sc[c] != 0) inside = false;
            if (!inside) continue;
            factor_into(rs.pair_coroot(lr, root), +1);
            factor_into(rs.pair_coroot(r, root), -1);
        }
        off += rs.rank;
    }
    Int d = 1;
    for (const auto& [p, e] : expo) {
        if (e < 0) throw std::logic_error("levi_dim: non-integral result");
        for (Int k = 0; k < e; ++k) d *= p;
    }
    return d;
}

Int HomogeneousSpace::irrep_dim(const Vec& dominant) const {
    Int d = 1;
    int off = 0;
    for (const auto& rs : g.factors) {
        d *= weyl_dim(rs, dominant.segment(off, rs.rank));
        off += rs.rank;
    }
    return d;
}

GradedGRep cohomology_irreducible(const HomogeneousSpace& X, const Vec& nu) {
    if (!X.levi_dominant(nu))
        throw std::invalid_argument("cohomology_irreducible: weight not Levi-dominant");
    GradedGRep out;
    DotResult d = dotted_normalize(X.g, nu);
    if (d.singular) return out;
    vecmap_add(out[d.degree], d.mu, 1);
    return out;
}

CohomResult cohomology(const HomogeneousSpace& X, const Bundle& b) {
    CohomResult res;
    std::vector<GradedGRep> per;
    per.reserve(b.pieces.size());
    for (const auto& [nu, m] : b.pieces) {
        GradedGRep h = cohomology_irreducible(X, nu);
        for (auto& [deg, reps] : h)
            for (auto& [w, c] : reps) c *= m;
        per.push_back(std::move(h));
    }

    std::size_t nonzero = 0;
    for (const auto& h : per)
        if (!h.empty()) ++nonzero;

    bool adjacency_ok = true;
    for (std::size_t i = 0; i < per.size() && adjacency_ok; ++i)
        for (std::size_t j = i + 1; j < per.size() && adjacency_ok; ++j)
            for (const auto& [di, ri] : per[i])
                for (const auto& [dj, rj] : per[j])
                    if (std::abs(di - dj) <= 1) adjacency_ok = false;

    for (const auto& h : per)
        for (const auto& [deg, reps] : h)
            for (const auto& [w, c] : reps) vecmap_add(res.value[deg], w, c);
    for (auto it = res.value.begin(); it != res.value.end();)
        it = it->second.empty() ? res.value.erase(it) : std::next(it);

    for (const auto& h : per)
        for (const auto& [deg, reps] : h)
            for (const auto& [w, c] : reps)
                vecmap_add(res.euler, w, (deg % 2 == 0) ? c : -c);

    if (nonzero == 0)
        res.cert = Certificate::VanishingCertified;
    else if (b.assembly == Assembly::Split || nonzero <= 1 || adjacency_ok)
        res.cert = Certificate::Exact;
    else
        res.cert = Certificate::EulerOnly;
    return res;
}

namespace {

struct WeylTable {
    // elements in BFS order: (parent, generator, sign)
    std::vector<int> parent;
    std::vector<int> gen;
    std::vector<int> sign;
};

const WeylTable& weyl_table(const RootSystem& rs) {
    static std::map<std::pair<int, int>, WeylTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(rs.family), rs.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    WeylTable t;
    std::map<Vec, int, VecLess> seen;
    std::vector<Vec> orbit;
    Vec rho = rs.rho();
    t.parent.push_back(-1);
    t.gen.push_back(-1);
    t.sign.push_back(1);
    seen.emplace(rho, 0);
    orbit.push_back(rho);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (int i = 0; i < rs.rank; ++i) {
            Vec v2 = rs.reflect(orbit[head], i);
            if (seen.count(v2)) continue;
            seen.emplace(v2, static_cast<int>(orbit.size()));
            orbit.push_back(v2);
            t.parent.push_back(static_cast<int>(head));
            t.gen.push_back(i);
            t.sign.push_back(-t.sign[head]);
        }
    }
    return cache.emplace(key, std::move(t)).first->second;
}

// Signed orbit sum of v under W: returns the strictly dominant orbit member
// with its sign, or nullopt if the orbit meets a wall (sum cancels).
std::optional<std::pair<Vec, int>> alternating_orbit(const RootSystem& rs, const Vec& v) {
    const WeylTable& t = weyl_table(rs);
    std::vector<Vec> img(t.parent.size());
    img[0] = v;
    std::optional<std::pair<Vec, int>> dom;
    for (std::size_t k = 0; k < img.size(); ++k) {
        if (k > 0) img[k] = rs.reflect(img[t.parent[k]], t.gen[k]);
        const Vec& w = img[k];
        bool strict = true, wall = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (w[i] == 0) wall = true;
            if (w[i] <= 0) strict = false;
        }
        if (wall) return std::nullopt;
        if (strict) dom = std::make_pair(w, t.sign[k]);
    }
    return dom;  // regular orbit always has exactly one strictly dominant member
}

}  // namespace

GRepSum euler_characteristic(const HomogeneousSpace& X, const Bundle& b) {
    GRepSum out;
    for (const auto& [nu, m] : b.pieces) {
        Vec shifted = nu + X.g.rho();
        int off = 0;
        int sign = 1;
        Vec mu = Vec::Zero(X.g.total_rank());
        bool singular = false;
        for (const auto& rs : X.g.factors) {
            auto r = alternating_orbit(rs, shifted.segment(off, rs.rank));
            if (!r) {
                singular = true;
                break;
            }
            mu.segment(off, rs.rank) = r->first - rs.rho();
            sign *= r->second;
            off += rs.rank;
        }
        if (!singular) vecmap_add(out, mu, sign * m);
    }
    return out;
}

Int grep_total_dim(const HomogeneousSpace& X, const GRepSum& r) {
    Int d = 0;
    for (const auto& [w, m] : r) d += m * X.irrep_dim(w);
    return d;
}

Int euler_integer(const HomogeneousSpace& X, const CohomResult& r) {
    return grep_total_dim(X, r.euler);
}

std::optional<std::pair<Vec, int>> relative_pushforward(
    const HomogeneousSpace& F, const std::vector<std::vector<int>>& crossed_target,
    const Vec& nu) {
    Vec mu = Vec::Zero(F.g.total_rank());
    int degree = 0;
    int off = 0;
    for (std::size_t f = 0; f < F.g.factors.size(); ++f) {
        const auto& rs = F.g.factors[f];
        // walk over the target's Levi nodes only
        std::vector<int> nodes;
        for (int i = 0; i < rs.rank; ++i)
            if (!std::binary_search(crossed_target[f].begin(), crossed_target[f].end(), i))
                nodes.push_back(i);
        DotNormalForm nf = make_dominant_relative(rs, nu.segment(off, rs.rank), nodes);
        if (nf.singular) return std::nullopt;
        degree += nf.length;
        mu.segment(off, rs.rank) = nf.dominant;
        off += rs.rank;
    }
    return std::make_pair(mu, degree);
}

}  // namespace flopcheck
