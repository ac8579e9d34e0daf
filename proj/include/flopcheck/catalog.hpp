#pragma once

#include "flopcheck/bbw.hpp"
#include "flopcheck/config.hpp"

#include <array>
#include <optional>

namespace flopcheck {

enum class Side { None, P, Q };

/// Dictionary entry for a named homogeneous bundle on F that is pulled back
/// from one side of the roof.  `nu_source` is the Levi(source)-dominant
/// label; `pieces_F` its filtration on F (sub-bundle first).
struct NamedBundle {
    std::string key;
    Side side = Side::None;
    Vec nu_source;
    std::vector<std::pair<Vec, Int>> pieces_F;
    std::string dual_key;
    Int rank = 0;
};

/// A formal bundle expression on F: a line twist a*h + b*H times named
/// pullback factors (dictionary indices, kept sorted).
struct ObjExpr {
    Int th = 0;
    Int tH = 0;
    std::vector<int> factors;
};

struct FTerm {
    ObjExpr expr;
    int shift = 0;
    Int mult = 1;
};

/// Shifted formal sum of bundle expressions; script objects are single-term.
struct FObject {
    std::vector<FTerm> terms;

    static FObject line(Int a, Int b, int shift = 0) {
        return FObject{{FTerm{ObjExpr{a, b, {}}, shift, 1}}};
    }
    bool single() const { return terms.size() == 1; }
};

struct SceneItemSpec {
    bool window = false;
    std::string label;
    FObject obj;  // empty for windows
};

struct StepSpec {
    enum class Kind {
        Swap,
        LeftMutate,
        RightMutate,
        Reorder,
        SerreFarRight,
        SerreFarLeft,
        WindowRight,
        WindowLeft
    };
    Kind kind = Kind::Swap;
    std::string desc;
    std::string left, right;          // adjacent pair, scene order
    std::string result;               // claimed descriptor (mutations)
    std::map<int, Int> hom;           // claimed graded dims, shift-normalized
    std::vector<std::string> movers;  // Serre rotations (scene prefix/suffix)
    std::vector<std::string> order;   // Reorder target (object labels only)
    int count = 0;                    // window move width
    std::string window, new_window;
};

struct LemmaItem {
    enum class Kind { HomVanish, HomEquals, AcyclicOnF, LeftOrthogonal, Orthogonal };
    Kind kind = Kind::HomVanish;
    std::string id;
    std::string desc;
    std::string lhs, rhs;        // descriptors (rhs unused for AcyclicOnF)
    std::map<int, Int> expect;   // HomEquals: degree -> total dimension
};

struct FlopCase {
    std::string name;  // C2, AG4, Mukai, Std
    int n = 0;         // parameter; 0 when the case is not parametric
    GroupSpec g;
    HomogeneousSpace F, P, Q;
    Vec h, H;                    // hyperplane classes as weights
    Vec omega_F, omega_V;        // canonical weights on F / V
    std::array<Int, 2> omega_P_hH{}, omega_Q_hH{}, omega_F_hH{}, omega_V_hH{};
    Int dim_v_rep = 0;           // dimension bookkeeping for the defining V

    std::vector<NamedBundle> dict;
    std::map<std::string, int> dict_index;
    std::map<Vec, std::string, VecLess> rep_names;

    std::vector<SceneItemSpec> initial, target;
    std::vector<StepSpec> script;
    std::vector<LemmaItem> lemmas;

    Vec line_weight(Int a, Int b) const { return a * h + b * H; }
    const NamedBundle& bundle(const std::string& key) const;
    const NamedBundle& bundle(int idx) const { return dict.at(static_cast<std::size_t>(idx)); }
    int bundle_index(const std::string& key) const;

    ObjExpr dual_expr(const ObjExpr& e) const;
    ObjExpr product_expr(const ObjExpr& a, const ObjExpr& b) const;
    FObject twist_object(const FObject& o, Int a, Int b) const;

    /// Canonical identity token: twist-equivalent descriptors (for example a
    /// dual written as a twist of the original) map to the same signature.
    /// Shifts are not part of the signature.
    std::string signature(const FObject& o) const;
    std::string show(const FObject& o) const;
    std::string rep_display(const Vec& mu) const;
    std::string grep_display(const HomogeneousSpace& X, const GRepSum& r) const;
};

/// Load and machine-check a catalog case.  `n` must be >= 2 for Mukai and
/// >= 1 for Std, and omitted (-1) otherwise.
FlopCase load_case(const std::string& name, int n, const Config& cfg);

std::vector<std::string> catalog_case_names();

/// Descriptor grammar: NAME[(twist)][[shift]] where NAME is "O" or a
/// dictionary key, twist is "a,b" or a combination of h and H such as
/// "-h+2H", and shift is an integer.  See descriptor.cpp.
FObject parse_object(const FlopCase& c, const std::string& text);

}  // namespace flopcheck
