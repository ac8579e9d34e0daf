#include "flopcheck/hom_v.hpp"

#include <algorithm>

namespace flopcheck {

namespace {

// Tensor a list of Levi-dominant labels over a GL-pure space's Levi blocks.
RepSum tensor_labels(const HomogeneousSpace& X, const std::vector<Vec>& labels) {
    RepSum acc;
    vecmap_add(acc, X.to_blocks(Vec::Zero(X.g.total_rank())), 1);
    for (const Vec& nu : labels) {
        RepSum rhs;
        vecmap_add(rhs, X.to_blocks(nu), 1);
        acc = tensor_decompose(X.levi, acc, rhs);
    }
    return acc;
}

// F-route: expand every factor into its F-filtration and tensor the pieces
// exactly over Levi(F).  Split exactly when no factor is genuinely filtered
// (tensor products of irreducible pieces are direct sums).
CohomResult f_route(const FlopCase& c, const ObjExpr& e) {
    const HomogeneousSpace& F = c.F;
    Vec tw = c.line_weight(e.th, e.tH);

    Bundle b;
    if (e.factors.empty()) {
        b.assembly = Assembly::Split;
        b.pieces.emplace_back(tw, 1);
        return cohomology(F, b);
    }
    bool filtered = false;
    RepSum cross;
    vecmap_add(cross, F.to_blocks(tw), 1);
    for (int f : e.factors) {
        const NamedBundle& nb = c.bundle(f);
        if (nb.pieces_F.size() > 1) filtered = true;
        RepSum next;
        for (const auto& [blk, m] : cross) {
            RepSum lhs;
            vecmap_add(lhs, blk, 1);
            for (const auto& [p, k] : nb.pieces_F) {
                RepSum rhs;
                vecmap_add(rhs, F.to_blocks(p), 1);
                for (const auto& [b2, m2] : tensor_decompose(F.levi, lhs, rhs))
                    vecmap_add(next, b2, m * k * m2);
            }
        }
        cross = std::move(next);
    }
    b.assembly = filtered ? Assembly::Filtered : Assembly::Split;
    for (const auto& [blk, m] : cross) b.pieces.emplace_back(F.from_blocks(blk), m);
    return cohomology(F, b);
}

// Pushforward route for a single-sided expression: the named factors are
// intact pullbacks, only the line part crosses the fibration.
std::optional<CohomResult> side_route(const FlopCase& c, const ObjExpr& e, Side side) {
    const HomogeneousSpace& target = side == Side::P ? c.P : c.Q;
    if (!target.gl_pure && !e.factors.empty()) return std::nullopt;

    CohomResult res;
    res.cert = Certificate::VanishingCertified;

    Vec tw = c.line_weight(e.th, e.tH);
    auto push = relative_pushforward(c.F, target.crossed, tw);
    if (!push) {
        // the whole expression pushes to zero
        return res;
    }
    auto [mu_rel, shift] = *push;

    Bundle b;
    b.assembly = Assembly::Split;
    if (e.factors.empty()) {
        b.pieces.emplace_back(mu_rel, 1);
    } else {
        std::vector<Vec> labels{mu_rel};
        for (int f : e.factors) labels.push_back(c.bundle(f).nu_source);
        for (const auto& [blk, k] : tensor_labels(target, labels))
            b.pieces.emplace_back(target.from_blocks(blk), k);
    }
    CohomResult on_target = cohomology(target, b);
    res.cert = on_target.cert;
    for (const auto& [deg, reps] : on_target.value) res.value[deg + shift] = reps;
    for (const auto& [w, m] : on_target.euler)
        vecmap_add(res.euler, w, shift % 2 == 0 ? m : -m);
    return res;
}

}  // namespace

CohomResult cohomology_on_F(const FlopCase& c, const ObjExpr& e) {
    bool has_p = false, has_q = false;
    for (int f : e.factors) {
        Side s = c.bundle(f).side;
        has_p = has_p || s == Side::P;
        has_q = has_q || s == Side::Q;
    }
    CohomResult res = f_route(c, e);
    if (res.cert != Certificate::EulerOnly) return res;
    if (has_p && has_q) return res;
    auto retry = side_route(c, e, has_p ? Side::P : Side::Q);
    if (retry && static_cast<int>(retry->cert) > static_cast<int>(res.cert)) return *retry;
    return res;
}

std::map<int, Int> graded_dims(const HomogeneousSpace& X, const GradedGRep& g) {
    std::map<int, Int> out;
    for (const auto& [deg, reps] : g) {
        Int d = grep_total_dim(X, reps);
        if (d != 0) out[deg] = d;
    }
    return out;
}

HomComplex hom_V(const FlopCase& c, const FObject& E, const FObject& F) {
    HomComplex out;
    out.cert = Certificate::VanishingCertified;
    for (const FTerm& te : E.terms) {
        ObjExpr dual = c.dual_expr(te.expr);
        for (const FTerm& tf : F.terms) {
            ObjExpr prod = c.product_expr(dual, tf.expr);
            for (int layer = 0; layer < 2; ++layer) {
                ObjExpr pe = prod;
                if (layer == 1) {
                    pe.th -= 1;
                    pe.tH -= 1;
                }
                CohomResult r = cohomology_on_F(c, pe);
                out.cert = weaker(out.cert, r.cert);
                const Int mult = te.mult * tf.mult;
                const int dshift = layer + te.shift - tf.shift;
                for (const auto& [deg, reps] : r.value)
                    for (const auto& [w, m] : reps)
                        vecmap_add(out.graded[deg + dshift], w, mult * m);
                Int chi = grep_total_dim(c.F, r.euler);
                out.euler += (dshift % 2 == 0 ? 1 : -1) * mult * chi;
            }
        }
    }
    for (auto it = out.graded.begin(); it != out.graded.end();)
        it = it->second.empty() ? out.graded.erase(it) : std::next(it);
    return out;
}

Tri hom_vanishes(const FlopCase& c, const FObject& E, const FObject& F) {
    HomComplex h = hom_V(c, E, F);
    if (h.cert == Certificate::EulerOnly) return h.euler != 0 ? Tri::False : Tri::Unknown;
    return h.empty() ? Tri::True : Tri::False;
}

OrthoCheck is_orthogonal(const FlopCase& c, const FObject& E, const FObject& F) {
    OrthoCheck o;
    o.fwd = hom_vanishes(c, E, F);
    o.bwd = hom_vanishes(c, F, E);
    return o;
}

Int euler_pairing(const FlopCase& c, const FObject& E, const FObject& F) {
    return hom_V(c, E, F).euler;
}

}  // namespace flopcheck
