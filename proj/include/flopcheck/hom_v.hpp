#pragma once

#include "flopcheck/catalog.hpp"

namespace flopcheck {

/// Graded Hom space between zero-section pushforwards in D^b(V), computed
/// through the two-term Koszul resolution of the zero section of
/// V = Tot(O_F(-h-H)).  The two layers never interact (the Koszul
/// differential restricts to zero on the zero section), so
///   hom_V(E, F) = h(F, E^v x F)  +  h(F, E^v x F (-h-H))[-1].
struct HomComplex {
    GradedGRep graded;
    Certificate cert = Certificate::EulerOnly;
    Int euler = 0;  // integer Euler characteristic, exact in every case

    bool empty() const { return graded.empty(); }
};

std::map<int, Int> graded_dims(const HomogeneousSpace& X, const GradedGRep& g);

/// Cohomology on F of a bundle expression, with the certificate rules of
/// cohomology() plus the single-sided pushforward retry: when the adjacency
/// rule fails and all named factors live on one side of the roof, the
/// computation is redone on that side, where the tensor decomposition is a
/// direct sum and every certificate is sharp.
CohomResult cohomology_on_F(const FlopCase& c, const ObjExpr& e);

HomComplex hom_V(const FlopCase& c, const FObject& E, const FObject& F);

enum class Tri { True, False, Unknown };

/// Certified vanishing of hom_V(E, F): True/False only with a certificate,
/// Unknown when the result is EulerOnly with zero Euler characteristic.
Tri hom_vanishes(const FlopCase& c, const FObject& E, const FObject& F);

struct OrthoCheck {
    Tri fwd = Tri::Unknown;  // hom_V(E, F) = 0
    Tri bwd = Tri::Unknown;  // hom_V(F, E) = 0
    bool both() const { return fwd == Tri::True && bwd == Tri::True; }
};

OrthoCheck is_orthogonal(const FlopCase& c, const FObject& E, const FObject& F);

/// Alternating sum of hom_V dimensions; computed from per-piece Euler
/// characteristics, hence exact even when the graded value is EulerOnly.
Int euler_pairing(const FlopCase& c, const FObject& E, const FObject& F);

}  // namespace flopcheck
