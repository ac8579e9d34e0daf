#include "flopcheck/mutation.hpp"

#include <algorithm>
#include <sstream>

namespace flopcheck {

std::size_t Scene::find(const std::string& label) const {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].label == label) return i;
    throw std::invalid_argument("scene: no item labelled '" + label + "'");
}

std::vector<std::size_t> Scene::object_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (!items[i].is_window) out.push_back(i);
    return out;
}

std::size_t Scene::object_count() const { return object_positions().size(); }

IMat gram_matrix(const FlopCase& c, const std::vector<FObject>& objs) {
    const auto nn = static_cast<Eigen::Index>(objs.size());
    IMat g(nn, nn);
    for (Eigen::Index i = 0; i < nn; ++i)
        for (Eigen::Index j = 0; j < nn; ++j)
            g(i, j) = euler_pairing(c, objs[static_cast<std::size_t>(i)],
                                    objs[static_cast<std::size_t>(j)]);
    return g;
}

namespace {

std::vector<FObject> scene_objects(const Scene& s) {
    std::vector<FObject> out;
    for (const auto& it : s.items)
        if (!it.is_window) out.push_back(it.obj);
    return out;
}

FObject normalize_shift(const FObject& o, int* shift_out = nullptr) {
    FObject n = o;
    int s = n.terms.empty() ? 0 : n.terms.front().shift;
    for (auto& t : n.terms) t.shift -= s;
    if (shift_out) *shift_out = s;
    return n;
}

std::string dims_str(const std::map<int, Int>& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, m] : d) {
        if (!first) os << ", ";
        os << "dim " << m << " in degree " << deg;
        first = false;
    }
    return os.str();
}

struct Runner {
    const FlopCase& c;
    Scene scene;
    ScriptReport& rep;
    int next_index = 0;
    std::vector<FObject> test_family;  // K-class probes

    Runner(const FlopCase& cc, ScriptReport& r) : c(cc), rep(r) {
        // Line-bundle probes spanning more classes than any scene we replay.
        for (Int a = -2; a <= 3; ++a)
            for (Int b = -2; b <= 3; ++b) test_family.push_back(FObject::line(a, b));
    }

    StepCertificate& fresh(const std::string& kind, const std::string& desc) {
        StepCertificate cert;
        cert.index = next_index++;
        cert.kind = kind;
        cert.desc = desc;
        rep.steps.push_back(std::move(cert));
        return rep.steps.back();
    }

    bool fail(StepCertificate& cert, const std::string& why) {
        cert.pass = false;
        cert.failure = why;
        return false;
    }

    // ---- K-class bookkeeping -------------------------------------------
    // The replay checks the mutation identity [result] = chi*[neighbor] -
    // [moved] against Euler pairings with both the probe family and the
    // current scene; together with the Gram identity G' = M^T G M this is
    // the K-theoretic shadow of the step.
    bool kclass_check(StepCertificate& cert, const FObject& a, const FObject& b,
                      const FObject& result, Int chi, bool right_mutation) {
        for (const FObject& t : test_family) {
            Int lhs1 = euler_pairing(c, t, result);
            Int lhs2 = euler_pairing(c, result, t);
            Int rhs1, rhs2;
            if (right_mutation) {
                rhs1 = chi * euler_pairing(c, t, b) - euler_pairing(c, t, a);
                rhs2 = chi * euler_pairing(c, b, t) - euler_pairing(c, a, t);
            } else {
                rhs1 = euler_pairing(c, t, b) - chi * euler_pairing(c, t, a);
                rhs2 = euler_pairing(c, b, t) - chi * euler_pairing(c, a, t);
            }
            if (lhs1 != rhs1 || lhs2 != rhs2) {
                cert.kclass_ok = false;
                return fail(cert, "K-class equation fails against probe " + c.show(t));
            }
        }
        return true;
    }

    // ---- primitives -----------------------------------------------------

    bool do_swap(const std::string& left, const std::string& right, const std::string& desc) {
        StepCertificate& cert = fresh("swap", desc);
        std::size_t i = scene.find(left), j = scene.find(right);
        if (j != i + 1) return fail(cert, "items not adjacent");
        if (scene.items[i].is_window || scene.items[j].is_window)
            return fail(cert, "swap applies to objects only");
        OrthoCheck o = is_orthogonal(c, scene.items[i].obj, scene.items[j].obj);
        cert.hom = graded_dims(c.F, hom_V(c, scene.items[i].obj, scene.items[j].obj).graded);
        cert.hom_back = graded_dims(c.F, hom_V(c, scene.items[j].obj, scene.items[i].obj).graded);
        if (o.fwd != Tri::True)
            return fail(cert, "hom(" + left + ", " + right + ") not certified zero");
        if (o.bwd != Tri::True)
            return fail(cert, "hom(" + right + ", " + left + ") not certified zero");
        std::swap(scene.items[i], scene.items[j]);
        cert.pass = true;
        return true;
    }

    // <A, B> -> <L_A B, A> (kind Left) or <A, B> -> <B, R_B A> (kind Right).
    bool do_mutate(bool right_mutation, const std::string& left, const std::string& right,
                   const std::string& claimed, const std::map<int, Int>& claimed_hom,
                   const std::string& desc) {
        StepCertificate& cert = fresh(right_mutation ? "right_mutate" : "left_mutate", desc);
        std::size_t i = scene.find(left), j = scene.find(right);
        if (j != i + 1) return fail(cert, "items not adjacent");
        const FObject& A = scene.items[i].obj;
        const FObject& B = scene.items[j].obj;

        HomComplex h = hom_V(c, A, B);
        cert.hom = graded_dims(c.F, h.graded);
        if (h.cert == Certificate::EulerOnly)
            return fail(cert, "hom not certified exactly");
        if (cert.hom.size() != 1)
            return fail(cert, "hom not concentrated in a single degree: " + dims_str(cert.hom));
        const int d_act = cert.hom.begin()->first;
        const Int m = cert.hom.begin()->second;

        // shift-normalized comparison with the claim
        const int aA = A.terms.front().shift, aB = B.terms.front().shift;
        std::map<int, Int> norm;
        norm[d_act - aA + aB] = m;
        if (!claimed_hom.empty() && norm != claimed_hom)
            return fail(cert, "hom mismatch: computed " + dims_str(norm) + ", claimed " +
                                  dims_str(claimed_hom));

        const int d0 = d_act - aA + aB;
        if (d0 != 0 && d0 != 1)
            return fail(cert, "mutation across degree " + std::to_string(d0) + " not supported");

        FObject result = parse_object(c, claimed);
        int s0 = right_mutation ? d0 : 1 - d0;
        int carry = right_mutation ? aA : aB;
        for (auto& t : result.terms) t.shift += s0 + carry;

        Int chi = (d_act % 2 == 0 ? 1 : -1) * m;
        if (!kclass_check(cert, A, B, result, chi, right_mutation)) return false;

        if (m == 1) {
            cert.notes = d0 == 1 ? "one-dimensional hom in degree 1: result realizes the "
                                   "extension (sub -> total -> quotient)"
                                 : "one-dimensional hom in degree 0: result is the cone of "
                                   "the (co)evaluation map";
        }

        if (right_mutation) {
            scene.items[i] = scene.items[j];
            scene.items[j] = SceneItem{false, claimed, result};
        } else {
            scene.items[j] = scene.items[i];
            scene.items[i] = SceneItem{false, claimed, result};
        }
        cert.pass = true;
        return true;
    }

    bool do_reorder(const std::vector<std::string>& target, const std::string& desc) {
        // insertion sort toward the target order; every crossing is a
        // certified orthogonal swap
        for (std::size_t t = 0; t < target.size(); ++t) {
            std::size_t cur = scene.find(target[t]);
            std::size_t want = scene.find(t == 0 ? target[0] : target[t - 1]);
            std::size_t dest = t == 0 ? leftmost_object() : want + 1;
            if (cur < dest) return false;  // target order inconsistent
            while (cur > dest) {
                if (!do_swap(scene.items[cur - 1].label, scene.items[cur].label, desc))
                    return false;
                --cur;
            }
        }
        return true;
    }

    std::size_t leftmost_object() const {
        auto pos = scene.object_positions();
        return pos.empty() ? 0 : pos.front();
    }

    bool do_serre(bool far_right, const std::vector<std::string>& movers,
                  const std::string& desc) {
        // rotating the outermost block across the Serre functor of V
        const Int wa = c.omega_V_hH[0], wb = c.omega_V_hH[1];
        for (std::size_t k = 0; k < movers.size(); ++k) {
            const std::string& label = far_right ? movers[k] : movers[movers.size() - 1 - k];
            StepCertificate& cert = fresh(far_right ? "serre_far_right" : "serre_far_left", desc);
            std::size_t i = scene.find(label);
            if (far_right && i != 0) return fail(cert, "rotated object must be first");
            if (!far_right && i != scene.items.size() - 1)
                return fail(cert, "rotated object must be last");
            if (scene.items[i].is_window) return fail(cert, "cannot rotate a window");
            FObject moved = far_right ? c.twist_object(scene.items[i].obj, -wa, -wb)
                                      : c.twist_object(scene.items[i].obj, wa, wb);
            std::string nl = c.show(normalize_shift(moved));
            cert.notes = std::string("twist by omega_V^") + (far_right ? "-1" : "+1") + ": " +
                         label + " -> " + nl;
            scene.items.erase(scene.items.begin() + static_cast<std::ptrdiff_t>(i));
            SceneItem it{false, nl, moved};
            if (far_right)
                scene.items.push_back(std::move(it));
            else
                scene.items.insert(scene.items.begin(), std::move(it));
            cert.pass = true;
        }
        return true;
    }

    bool do_window(bool to_right, const std::string& window, int count,
                   const std::string& new_name, const std::string& desc) {
        StepCertificate& cert = fresh(to_right ? "window_right" : "window_left", desc);
        std::size_t i = scene.find(window);
        if (!scene.items[i].is_window) return fail(cert, "not a window");
        for (int k = 0; k < count; ++k) {
            if (to_right) {
                if (i + 1 >= scene.items.size()) return fail(cert, "window at right edge");
                std::swap(scene.items[i], scene.items[i + 1]);
                ++i;
            } else {
                if (i == 0) return fail(cert, "window at left edge");
                std::swap(scene.items[i], scene.items[i - 1]);
                --i;
            }
        }
        std::ostringstream os;
        os << "window " << window << " absorbs " << count << " object(s)";
        if (!new_name.empty()) {
            os << " and becomes " << new_name;
            scene.items[i].label = new_name;
        }
        cert.notes = os.str();
        cert.pass = true;
        return true;
    }

    // Gram identity for the previous object-level rewrite: recompute and
    // compare with the elementary-matrix prediction.
    bool gram_step_check(StepCertificate& cert, const IMat& before, Int chi, bool right_mutation,
                         std::size_t pos) {
        IMat after = gram_matrix(c, scene_objects(scene));
        const auto n = before.rows();
        IMat m = IMat::Identity(n, n);
        const auto p = static_cast<Eigen::Index>(pos);
        // columns transform: right: (a, b) -> (b, chi*b - a); left: (a, b) -> (b - chi*a, a)
        m(p, p) = 0;
        m(p + 1, p + 1) = 0;
        if (right_mutation) {
            m(p + 1, p) = 1;
            m(p, p + 1) = -1;
            m(p + 1, p + 1) = chi;
        } else {
            m(p, p) = -chi;
            m(p, p + 1) = 1;
            m(p + 1, p) = 1;
        }
        IMat pred = m.transpose() * before * m;
        if (pred != after) {
            cert.gram_ok = false;
            return fail(cert, "Gram matrix does not transform by the elementary matrix");
        }
        return true;
    }
};

}  // namespace

ScriptReport run_script(const FlopCase& c) {
    ScriptReport rep;
    rep.case_name = c.name + (c.n > 0 ? "(" + std::to_string(c.n) + ")" : "");
    Runner run(c, rep);

    for (const auto& spec : c.initial)
        run.scene.items.push_back(SceneItem{spec.window, spec.label, spec.obj});

    // initial scene: exceptional objects, semiorthogonal Gram
    {
        StepCertificate& cert = run.fresh("initial", "initial scene checks");
        bool ok = true;
        std::string why;
        for (const auto& it : run.scene.items) {
            if (it.is_window) continue;
            HomComplex h = hom_V(c, it.obj, it.obj);
            auto dims = graded_dims(c.F, h.graded);
            if (h.cert == Certificate::EulerOnly || dims != std::map<int, Int>{{0, 1}}) {
                ok = false;
                why = "object " + it.label + " not exceptional: " + dims_str(dims);
                break;
            }
        }
        if (ok) {
            IMat g = gram_matrix(c, scene_objects(run.scene));
            for (Eigen::Index i = 0; i < g.rows() && ok; ++i) {
                if (g(i, i) != 1) {
                    ok = false;
                    why = "diagonal Gram entry != 1";
                }
                for (Eigen::Index j = 0; j < i && ok; ++j)
                    if (g(i, j) != 0) {
                        ok = false;
                        why = "nonzero Euler pairing below the diagonal";
                    }
            }
        }
        cert.pass = ok;
        if (!ok) cert.failure = why;
        rep.initial_ok = ok;
        if (!ok) {
            rep.message = "initial scene invalid: " + why;
            return rep;
        }
    }

    for (const auto& st : c.script) {
        bool ok = true;
        switch (st.kind) {
            case StepSpec::Kind::Swap:
                ok = run.do_swap(st.left, st.right, st.desc);
                break;
            case StepSpec::Kind::LeftMutate:
            case StepSpec::Kind::RightMutate: {
                bool right = st.kind == StepSpec::Kind::RightMutate;
                auto pos = run.scene.object_positions();
                IMat before = gram_matrix(c, scene_objects(run.scene));
                std::size_t obj_pos = 0;
                {
                    std::size_t i = run.scene.find(st.left);
                    for (std::size_t k = 0; k < pos.size(); ++k)
                        if (pos[k] == i) obj_pos = k;
                }
                ok = run.do_mutate(right, st.left, st.right, st.result, st.hom, st.desc);
                if (ok) {
                    StepCertificate& cert = rep.steps.back();
                    Int chi = 0;
                    for (const auto& [deg, m] : cert.hom) chi += (deg % 2 == 0 ? m : -m);
                    ok = run.gram_step_check(cert, before, chi, right, obj_pos);
                }
                break;
            }
            case StepSpec::Kind::Reorder:
                ok = run.do_reorder(st.order, st.desc);
                break;
            case StepSpec::Kind::SerreFarRight:
                ok = run.do_serre(true, st.movers, st.desc);
                break;
            case StepSpec::Kind::SerreFarLeft:
                ok = run.do_serre(false, st.movers, st.desc);
                break;
            case StepSpec::Kind::WindowRight:
                ok = run.do_window(true, st.window, st.count, st.new_window, st.desc);
                break;
            case StepSpec::Kind::WindowLeft:
                ok = run.do_window(false, st.window, st.count, st.new_window, st.desc);
                break;
        }
        if (!ok) {
            rep.message = "step failed: " + (rep.steps.empty() ? st.desc : rep.steps.back().failure);
            return rep;
        }
    }

    // final comparison: objectwise up to shift, then exact Gram equality
    std::vector<FObject> final_norm;
    for (const auto& it : run.scene.items) {
        if (it.is_window) continue;
        int s = 0;
        FObject n = normalize_shift(it.obj, &s);
        rep.final_objects.push_back(c.show(n));
        rep.final_shifts.push_back(s);
        final_norm.push_back(std::move(n));
    }
    std::vector<FObject> target;
    for (const auto& spec : c.target)
        if (!spec.window) target.push_back(spec.obj);

    rep.final_objects_match = final_norm.size() == target.size();
    if (rep.final_objects_match)
        for (std::size_t i = 0; i < target.size(); ++i)
            if (c.signature(final_norm[i]) != c.signature(target[i])) {
                rep.final_objects_match = false;
                rep.message = "final object " + std::to_string(i) + " is " +
                              c.show(final_norm[i]) + ", target " + c.show(target[i]);
                break;
            }

    rep.final_gram = gram_matrix(c, final_norm);
    rep.target_gram = gram_matrix(c, target);
    rep.final_gram_match = rep.final_objects_match && rep.final_gram == rep.target_gram;

    rep.pass = rep.initial_ok && rep.final_objects_match && rep.final_gram_match;
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    if (rep.pass) rep.message = "script replayed; final scene matches the target decomposition";
    return rep;
}

}  // namespace flopcheck
