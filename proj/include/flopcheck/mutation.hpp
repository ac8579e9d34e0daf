#pragma once

#include "flopcheck/hom_v.hpp"

namespace flopcheck {

struct SceneItem {
    bool is_window = false;
    std::string label;
    FObject obj;  // empty for windows
};

struct Scene {
    std::vector<SceneItem> items;

    std::size_t find(const std::string& label) const;
    std::vector<std::size_t> object_positions() const;
    std::size_t object_count() const;
};

/// One verified primitive rewrite of the scene.  Composite script steps
/// (reorders, block rotations) expand into several certificates.
struct StepCertificate {
    int index = 0;
    std::string kind;
    std::string desc;
    bool pass = false;
    std::map<int, Int> hom;       // computed graded dims (mutations; swap fwd)
    std::map<int, Int> hom_back;  // swap backward direction
    bool kclass_ok = true;
    bool gram_ok = true;
    std::string notes;
    std::string failure;
};

struct ScriptReport {
    std::string case_name;
    bool pass = false;
    bool initial_ok = false;
    bool final_objects_match = false;
    bool final_gram_match = false;
    std::vector<StepCertificate> steps;
    std::vector<std::string> final_objects;  // shift-normalized descriptors
    std::vector<int> final_shifts;
    IMat final_gram, target_gram;
    std::string message;
};

/// Euler-pairing Gram matrix over the scene's objects (windows excluded),
/// in scene order.
IMat gram_matrix(const FlopCase& c, const std::vector<FObject>& objs);

/// Replay the case's mutation script from its initial scene: verify the
/// initial semiorthogonality and exceptionality, certify every step, and
/// compare the final scene with the catalog target (objectwise up to shift,
/// plus exact Gram equality).
ScriptReport run_script(const FlopCase& c);

}  // namespace flopcheck
