#include "flopcheck/character_ring.hpp"

#include <algorithm>
#include <functional>

namespace flopcheck {

bool LeviSpec::block_dominant(const Vec& w) const {
    int off = 0;
    for (int b : blocks) {
        for (int i = 0; i + 1 < b; ++i)
            if (w[off + i] < w[off + i + 1]) return false;
        off += b;
    }
    return true;
}

namespace {

// Weights of the GL_k irreducible with highest weight mu (weakly decreasing,
// possibly negative), via Gelfand-Tsetlin patterns: recurse on interlacing
// rows, the k-th coordinate being |mu| - |row|.
std::map<std::vector<Int>, Int> gl_char(const std::vector<Int>& mu) {
    const std::size_t k = mu.size();
    std::map<std::vector<Int>, Int> out;
    if (k == 0) {
        out[{}] = 1;
        return out;
    }
    if (k == 1) {
        out[{mu[0]}] = 1;
        return out;
    }
    Int total = 0;
    for (Int m : mu) total += m;
    // enumerate rows nu of length k-1 interlacing mu
    std::vector<Int> nu(k - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k - 1) {
            auto sub = gl_char(nu);
            Int snu = 0;
            for (Int m : nu) snu += m;
            for (const auto& [w, c] : sub) {
                std::vector<Int> w2 = w;
                w2.push_back(total - snu);
                out[w2] += c;
            }
            return;
        }
        for (Int v = mu[i + 1]; v <= mu[i]; ++v) {
            nu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Int> slice(const Vec& w, int off, int len) {
    std::vector<Int> s(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = w[off + i];
    return s;
}

}  // namespace

CharacterPoly irr_character(const LeviSpec& spec, const Vec& lam) {
    if (!spec.block_dominant(lam))
        throw std::invalid_argument("irr_character: weight not block-dominant");
    CharacterPoly acc;
    acc.emplace(Vec(0), 1);
    int off = 0;
    for (int b : spec.blocks) {
        auto blk = gl_char(slice(lam, off, b));
        CharacterPoly next;
        for (const auto& [pre, c1] : acc) {
            for (const auto& [w, c2] : blk) {
                Vec key(pre.size() + static_cast<Eigen::Index>(w.size()));
                for (Eigen::Index i = 0; i < pre.size(); ++i) key[i] = pre[i];
                for (std::size_t i = 0; i < w.size(); ++i)
                    key[pre.size() + static_cast<Eigen::Index>(i)] = w[i];
                vecmap_add(next, key, c1 * c2);
            }
        }
        acc = std::move(next);
        off += b;
    }
    return acc;
}

CharacterPoly character_of(const LeviSpec& spec, const RepSum& r) {
    CharacterPoly c;
    for (const auto& [lam, m] : r) {
        auto ch = irr_character(spec, lam);
        for (const auto& [w, k] : ch) vecmap_add(c, w, m * k);
    }
    return c;
}

RepSum peel(const LeviSpec& spec, CharacterPoly c) {
    RepSum out;
    while (!c.empty()) {
        // lex-maximal monomial is a highest weight of the remainder
        auto it = std::prev(c.end());
        Vec lam = it->first;
        Int m = it->second;
        if (m < 0 || !spec.block_dominant(lam))
            throw std::logic_error("peel: negative multiplicity or non-dominant leading term");
        auto ch = irr_character(spec, lam);
        for (const auto& [w, k] : ch) vecmap_add(c, w, -m * k);
        vecmap_add(out, lam, m);
    }
    return out;
}

RepSum tensor_decompose(const LeviSpec& spec, const RepSum& a, const RepSum& b) {
    CharacterPoly ca = character_of(spec, a);
    CharacterPoly cb = character_of(spec, b);
    CharacterPoly prod;
    for (const auto& [wa, m1] : ca)
        for (const auto& [wb, m2] : cb) vecmap_add(prod, wa + wb, m1 * m2);
    return peel(spec, prod);
}

Vec dual_weight(const LeviSpec& spec, const Vec& lam) {
    Vec d(lam.size());
    int off = 0;
    for (int b : spec.blocks) {
        for (int i = 0; i < b; ++i) d[off + i] = -lam[off + b - 1 - i];
        off += b;
    }
    return d;
}

RepSum dual(const LeviSpec& spec, const RepSum& r) {
    RepSum out;
    for (const auto& [lam, m] : r) vecmap_add(out, dual_weight(spec, lam), m);
    return out;
}

Int dim(const LeviSpec& spec, const Vec& lam) {
    Int d = 0;
    for (const auto& [w, c] : irr_character(spec, lam)) {
        (void)w;
        d += c;
    }
    return d;
}

Int dim(const LeviSpec& spec, const RepSum& r) {
    Int d = 0;
    for (const auto& [lam, m] : r) d += m * dim(spec, lam);
    return d;
}

std::vector<std::pair<Vec, Int>> branch(const LeviSpec& big, const LeviSpec& small,
                                        const Vec& lam) {
    if (big.total() != small.total())
        throw std::invalid_argument("branch: specs act on different tori");
    {
        // small must refine big block by block
        std::size_t j = 0;
        for (int b : big.blocks) {
            int acc = 0;
            while (acc < b) {
                if (j >= small.blocks.size())
                    throw std::invalid_argument("branch: small does not refine big");
                acc += small.blocks[j++];
            }
            if (acc != b) throw std::invalid_argument("branch: small does not refine big");
        }
        if (j != small.blocks.size())
            throw std::invalid_argument("branch: small does not refine big");
    }
    RepSum pieces = peel(small, irr_character(big, lam));
    std::vector<std::pair<Vec, Int>> out(pieces.begin(), pieces.end());
    const int b0 = small.blocks.empty() ? 0 : small.blocks[0];
    auto key = [b0](const Vec& w) {
        Int s = 0;
        for (int i = 0; i < b0; ++i) s += w[i];
        return s;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        Int kx = key(x.first), ky = key(y.first);
        if (kx != ky) return kx > ky;
        return VecLess{}(y.first, x.first);
    });
    return out;
}

}  // namespace flopcheck
