#pragma once

#include "flopcheck/types.hpp"

#include <stdexcept>

namespace flopcheck {

/// A Levi subgroup presented as a product of GL blocks.  For type A with
/// crossed nodes {i_1 < ... < i_k} (0-indexed) the blocks are
/// (i_1+1, i_2-i_1, ..., n+1-i_k-1 ... ) computed on the epsilon line; the
/// derivation lives in bbw.cpp next to the space data.
struct LeviSpec {
    std::vector<int> blocks;

    int total() const {
        int t = 0;
        for (int b : blocks) t += b;
        return t;
    }
    bool block_dominant(const Vec& w) const;
};

/// Multiset of block-dominant weights with (positive) multiplicities.
using RepSum = VecMap;

/// Finitely supported integer function on the weight lattice of the Levi
/// torus (a Laurent-polynomial character in the block variables).
using CharacterPoly = VecMap;

/// Character of the irreducible with highest weight `lam` (block-dominant,
/// weakly decreasing integer tuple per block).  Gelfand-Tsetlin branching per
/// GL block; exact.
CharacterPoly irr_character(const LeviSpec& spec, const Vec& lam);

CharacterPoly character_of(const LeviSpec& spec, const RepSum& r);

/// Decompose a product of characters into irreducibles by iterated
/// highest-weight peeling.  Throws on a negative multiplicity, which would
/// indicate a character bug upstream.
RepSum tensor_decompose(const LeviSpec& spec, const RepSum& a, const RepSum& b);

/// Decompose an explicit character into irreducibles by peeling.
RepSum peel(const LeviSpec& spec, CharacterPoly c);

RepSum dual(const LeviSpec& spec, const RepSum& r);
Vec dual_weight(const LeviSpec& spec, const Vec& lam);

Int dim(const LeviSpec& spec, const Vec& lam);
Int dim(const LeviSpec& spec, const RepSum& r);

/// Restrict the irreducible `lam` of `big` to `small` (whose blocks refine
/// big's) and return the associated-graded pieces, ordered by decreasing
/// pairing with the cocharacter that is 1 on small's first block (sub-bundle
/// first), ties broken lexicographically descending.
std::vector<std::pair<Vec, Int>> branch(const LeviSpec& big, const LeviSpec& small,
                                        const Vec& lam);

}  // namespace flopcheck
