#pragma once

#include "flopcheck/character_ring.hpp"
#include "flopcheck/root_system.hpp"

namespace flopcheck {

/// A semisimple group as a list of simple factors.  Weights of the product
/// are the concatenated fundamental coordinates.
struct GroupSpec {
    std::vector<RootSystem> factors;

    int total_rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }
    int offset(std::size_t f) const {
        int r = 0;
        for (std::size_t i = 0; i < f; ++i) r += factors[i].rank;
        return r;
    }
    Vec rho() const { return Vec::Ones(total_rank()); }
};

/// Normal form of the dotted action on a product group.
struct DotResult {
    bool singular = true;
    int degree = 0;  // total length of the normalizing Weyl element
    Vec mu;          // dominant weight, valid when !singular
};

DotResult dotted_normalize(const GroupSpec& g, const Vec& lambda);

/// G/R for the parabolic R given by crossed nodes (per factor, 0-indexed).
struct HomogeneousSpace {
    GroupSpec g;
    std::vector<std::vector<int>> crossed;  // sorted, per factor
    int dim = 0;                            // # positive roots outside the Levi
    LeviSpec levi;                          // GL blocks on the epsilon line
    bool gl_pure = true;  // false when a type-C factor keeps a symplectic tail
    Vec omega;            // canonical weight: -sum of roots outside the Levi

    static HomogeneousSpace make(GroupSpec g, std::vector<std::vector<int>> crossed);

    bool is_crossed(std::size_t f, int node) const;
    std::vector<int> levi_nodes(std::size_t f) const;
    bool levi_dominant(const Vec& nu) const;

    /// Block coordinates (on the epsilon line of each factor, concatenated)
    /// of a Levi-dominant weight, and the inverse map.  Only meaningful for
    /// GL-pure Levis; to_blocks/from_blocks assert gl_pure.
    Vec to_blocks(const Vec& nu) const;
    Vec from_blocks(const Vec& blocks) const;

    /// Rank of the homogeneous bundle E_nu (dimension of the Levi
    /// irreducible), via the Weyl dimension formula over the Levi roots.
    Int levi_dim(const Vec& nu) const;
    Int irrep_dim(const Vec& dominant) const;  // dim of the G-irrep
};

enum class Certificate { EulerOnly = 0, Exact = 1, VanishingCertified = 2 };

inline Certificate weaker(Certificate a, Certificate b) {
    return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

const char* to_string(Certificate c);

enum class Assembly { Split, Filtered };

/// Ordered list of Levi-dominant weights with multiplicities; Filtered keeps
/// the filtration order (sub-bundle first).
struct Bundle {
    std::vector<std::pair<Vec, Int>> pieces;
    Assembly assembly = Assembly::Filtered;

    static Bundle line(const Vec& nu) { return Bundle{{{nu, 1}}, Assembly::Split}; }
};

/// Virtual sum of G-irreducibles: dominant weight -> multiplicity (may be
/// negative in Euler characteristics).
using GRepSum = VecMap;

/// Cohomological degree -> G-representation.
using GradedGRep = std::map<int, GRepSum>;

struct CohomResult {
    GradedGRep value;
    Certificate cert = Certificate::EulerOnly;
    GRepSum euler;  // alternating sum, exact regardless of cert
};

/// Single irreducible piece: empty if the dotted normal form is singular,
/// otherwise one irreducible in the degree given by the Weyl length.
GradedGRep cohomology_irreducible(const HomogeneousSpace& X, const Vec& nu);

/// Assemble piecewise cohomology with the conservative certificate rules:
/// Split, or at most one nonzero piece, or all nonzero degrees pairwise at
/// distance >= 2 between distinct pieces, gives Exact; all pieces acyclic
/// gives VanishingCertified; anything else is EulerOnly.
CohomResult cohomology(const HomogeneousSpace& X, const Bundle& b);

/// Independent Euler-characteristic oracle: exhaustive signed Weyl-orbit
/// summation per piece (no chamber walk).  Exact, and deliberately on a
/// different code path from make_dominant.
GRepSum euler_characteristic(const HomogeneousSpace& X, const Bundle& b);

Int grep_total_dim(const HomogeneousSpace& X, const GRepSum& r);
Int euler_integer(const HomogeneousSpace& X, const CohomResult& r);

/// Relative pushforward of the line bundle with weight `nu` along the
/// fibration G/R -> G/R', where R' is the parabolic with crossed set
/// `crossed_target` (a subset of R's crossed nodes).  Returns the target
/// Levi-dominant weight and the degree shift, or nullopt if the relative
/// dotted action is singular (pushforward vanishes).
std::optional<std::pair<Vec, int>> relative_pushforward(
    const HomogeneousSpace& F, const std::vector<std::vector<int>>& crossed_target,
    const Vec& nu);

}  // namespace flopcheck
