#include "flopcheck/lemmas.hpp"

namespace flopcheck {

LemmaResult run_lemma(const FlopCase& c, const LemmaItem& item) {
    LemmaResult r;
    r.id = item.id;
    r.desc = item.desc;
    switch (item.kind) {
        case LemmaItem::Kind::HomVanish: {
            FObject E = parse_object(c, item.lhs), F = parse_object(c, item.rhs);
            Tri t = hom_vanishes(c, E, F);
            r.pass = t == Tri::True;
            r.detail = t == Tri::True    ? "vanishes (certified)"
                       : t == Tri::False ? "nonzero"
                                         : "Euler characteristic 0, vanishing not certified";
            break;
        }
        case LemmaItem::Kind::HomEquals: {
            FObject E = parse_object(c, item.lhs), F = parse_object(c, item.rhs);
            HomComplex h = hom_V(c, E, F);
            auto dims = graded_dims(c.F, h.graded);
            r.pass = h.cert != Certificate::EulerOnly && dims == item.expect;
            std::string got;
            for (const auto& [deg, m] : dims)
                got += (got.empty() ? "" : ", ") + std::to_string(m) + " in degree " +
                       std::to_string(deg);
            if (got.empty()) got = "0";
            r.detail = got + " [" + to_string(h.cert) + "]";
            break;
        }
        case LemmaItem::Kind::AcyclicOnF: {
            FObject E = parse_object(c, item.lhs);
            if (!E.single()) throw std::invalid_argument("AcyclicOnF wants a single term");
            CohomResult cr = cohomology_on_F(c, E.terms.front().expr);
            r.pass = cr.cert == Certificate::VanishingCertified;
            r.detail = std::string("certificate ") + to_string(cr.cert);
            break;
        }
        case LemmaItem::Kind::LeftOrthogonal: {
            FObject E = parse_object(c, item.lhs), F = parse_object(c, item.rhs);
            Tri t = hom_vanishes(c, E, F);
            r.pass = t == Tri::True;
            r.detail = t == Tri::True ? "left-orthogonal (certified)" : "hom nonzero or uncertified";
            break;
        }
        case LemmaItem::Kind::Orthogonal: {
            FObject E = parse_object(c, item.lhs), F = parse_object(c, item.rhs);
            OrthoCheck o = is_orthogonal(c, E, F);
            r.pass = o.both();
            r.detail = o.both() ? "orthogonal both ways (certified)" : "not certified orthogonal";
            break;
        }
    }
    return r;
}

std::vector<LemmaResult> run_lemma_suite(const FlopCase& c) {
    std::vector<LemmaResult> out;
    out.reserve(c.lemmas.size());
    for (const auto& item : c.lemmas) out.push_back(run_lemma(c, item));
    return out;
}

}  // namespace flopcheck
