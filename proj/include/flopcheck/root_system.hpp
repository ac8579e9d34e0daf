#pragma once

#include "flopcheck/types.hpp"

#include <optional>
#include <stdexcept>

namespace flopcheck {

enum class Family { A, C };

/// One positive root, kept in three coordinate systems at once.
struct PosRoot {
    Vec root_sc;    // coordinates in the simple-root basis
    Vec coroot_sc;  // coordinates of the coroot in the simple-coroot basis
    Vec fund;       // fundamental-weight coordinates of the root
};

/// A simple root system of type A_n (n >= 1) or C_n (n >= 2), driven by its
/// Cartan matrix.  Weights are integer vectors in fundamental-weight
/// coordinates throughout; epsilon coordinates are derived on demand.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so column j holds the
/// fundamental coordinates of alpha_j.  For type C the last node is long
/// (alpha_n = 2 e_n), matching the hyperplane class h = omega_1 on P(V).
struct RootSystem {
    Family family = Family::A;
    int rank = 0;
    IMat cartan;
    std::vector<PosRoot> positive;

    static RootSystem make(Family f, int rank);

    Vec rho() const { return Vec::Ones(rank); }

    /// <w, alpha_i^vee> in fundamental coordinates is just the i-th entry.
    Int pair_simple(const Vec& w, int i) const { return w[i]; }

    Int pair_coroot(const Vec& w, const PosRoot& r) const {
        return r.coroot_sc.dot(w);
    }

    /// Index of a positive root given in simple-root coordinates, if present.
    std::optional<std::size_t> find_root(const Vec& root_sc) const;

    Vec reflect(const Vec& w, int i) const {
        return w - w[i] * cartan.col(i);
    }

    Int weyl_order() const;
};

/// Result of the dotted-action normal form on lambda:
/// either lambda + rho lies on a wall (singular), or there is a unique Weyl
/// element w of length `length` with w(lambda + rho) strictly dominant and
/// dominant = w(lambda + rho) - rho.
struct DotNormalForm {
    bool singular = true;
    std::vector<int> word;  // w = s_{word[0]} ... s_{word.back()}, applied right to left
    int length = 0;
    Vec dominant;           // the dotted image, valid when !singular
};

DotNormalForm make_dominant(const RootSystem& rs, const Vec& lambda);

/// Same normal form, but for the dotted action of the parabolic Weyl group
/// generated by the simple reflections in `nodes`; used by relative
/// pushforwards along fibrations between flag varieties.
DotNormalForm make_dominant_relative(const RootSystem& rs, const Vec& lambda,
                                     const std::vector<int>& nodes);

struct WeylElement {
    std::vector<int> word;  // reduced; identity has an empty word
    int length = 0;
};

/// All |W| elements with correct lengths, by breadth-first search on the
/// orbit of rho.  Throws if rank exceeds the cap.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, int rank_cap = 8);

Vec apply_word(const RootSystem& rs, const std::vector<int>& word, Vec v);

/// Weyl dimension formula, evaluated exactly via prime factorization of the
/// individual pairing factors.  `lam` must be dominant.
Int weyl_dim(const RootSystem& rs, const Vec& lam);

/// Lift fundamental coordinates to epsilon coordinates:
/// type A_n -> Z^{n+1} (last entry 0), type C_n -> Z^n.
Vec eps_lift(const RootSystem& rs, const Vec& fund);

/// Inverse of eps_lift up to the central shift for type A.
Vec eps_to_fund(const RootSystem& rs, const Vec& eps);

}  // namespace flopcheck
