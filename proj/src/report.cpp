#include "flopcheck/report.hpp"

#include <json.hpp>

#include <sstream>

namespace flopcheck {

namespace {

using nlohmann::json;

json dims_json(const std::map<int, Int>& d) {
    json out = json::object();
    for (const auto& [deg, m] : d) out[std::to_string(deg)] = m;
    return out;
}

json step_json(const StepCertificate& s) {
    json j{{"index", s.index},   {"kind", s.kind},         {"desc", s.desc},
           {"pass", s.pass},     {"kclass_ok", s.kclass_ok}, {"gram_ok", s.gram_ok}};
    if (!s.hom.empty()) j["hom"] = dims_json(s.hom);
    if (!s.hom_back.empty()) j["hom_back"] = dims_json(s.hom_back);
    if (!s.notes.empty()) j["notes"] = s.notes;
    if (!s.failure.empty()) j["failure"] = s.failure;
    return j;
}

json case_json(const CaseReport& r, bool with_steps) {
    json j;
    j["case"] = r.case_name;
    if (r.n > 0) j["n"] = r.n;
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    j["seconds"] = r.seconds;
    json lemmas = json::array();
    for (const auto& l : r.lemmas)
        lemmas.push_back(
            json{{"id", l.id}, {"desc", l.desc}, {"pass", l.pass}, {"detail", l.detail}});
    j["lemmas"] = std::move(lemmas);
    if (r.script_ran) {
        json s;
        s["pass"] = r.script.pass;
        s["initial_ok"] = r.script.initial_ok;
        s["final_objects_match"] = r.script.final_objects_match;
        s["final_gram_match"] = r.script.final_gram_match;
        s["message"] = r.script.message;
        s["final_objects"] = r.script.final_objects;
        s["steps_total"] = r.script.steps.size();
        if (with_steps) {
            json steps = json::array();
            for (const auto& st : r.script.steps) steps.push_back(step_json(st));
            s["steps"] = std::move(steps);
        }
        j["script"] = std::move(s);
    }
    return j;
}

std::string render_text(const std::vector<CaseReport>& reports, bool with_steps) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "== " << r.case_name << " : " << (r.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& l : r.lemmas)
            os << "  lemma " << l.id << " : " << (l.pass ? "pass" : "FAIL") << "  (" << l.detail
               << ")\n";
        if (r.script_ran) {
            os << "  script: " << (r.script.pass ? "pass" : "FAIL") << " (" << r.script.steps.size()
               << " certificates) " << r.script.message << "\n";
            if (with_steps)
                for (const auto& s : r.script.steps) {
                    os << "    [" << s.index << "] " << s.kind << " : "
                       << (s.pass ? "pass" : "FAIL") << "  " << s.desc;
                    if (!s.notes.empty()) os << "  -- " << s.notes;
                    if (!s.failure.empty()) os << "  !! " << s.failure;
                    os << "\n";
                }
            if (r.script.pass) {
                os << "  final scene:";
                for (const auto& o : r.script.final_objects) os << " " << o;
                os << "\n";
            }
        }
    }
    return os.str();
}

std::string render_markdown(const std::vector<CaseReport>& reports) {
    std::ostringstream os;
    os << "| case | lemmas | script | verdict | seconds |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        std::size_t lp = 0;
        for (const auto& l : r.lemmas) lp += l.pass ? 1 : 0;
        os << "| " << r.case_name << " | " << lp << "/" << r.lemmas.size() << " | ";
        if (r.script_ran)
            os << (r.script.pass ? "pass" : "fail") << " (" << r.script.steps.size() << " steps)";
        else
            os << "-";
        os << " | " << (r.pass ? "PASS" : "FAIL") << " | ";
        os.precision(3);
        os << std::fixed << r.seconds << " |\n";
    }
    return os.str();
}

}  // namespace

std::string render_report(const std::vector<CaseReport>& reports, ReportFormat fmt,
                          bool with_steps) {
    if (fmt == ReportFormat::Json) {
        json root = json::array();
        for (const auto& r : reports) root.push_back(case_json(r, with_steps));
        return root.dump(2) + "\n";
    }
    if (fmt == ReportFormat::Markdown) return render_markdown(reports);
    return render_text(reports, with_steps);
}

}  // namespace flopcheck
