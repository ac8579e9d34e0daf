#include "flopcheck/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace flopcheck {

CaseReport verify_case(const FlopCase& c, const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    CaseReport r;
    r.case_name = c.name + (c.n > 0 ? "(" + std::to_string(c.n) + ")" : "");
    r.n = c.n;
    r.lemmas_pass = true;
    if (!opt.only_script) {
        r.lemmas = run_lemma_suite(c);
        for (const auto& l : r.lemmas) r.lemmas_pass = r.lemmas_pass && l.pass;
    }
    r.pass = r.lemmas_pass;
    if (!opt.only_lemmas) {
        r.script = run_script(c);
        r.script_ran = true;
        r.pass = r.pass && r.script.pass;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CaseReport> verify_all(const Config& cfg, const VerifyOptions& opt) {
    struct Job {
        std::string name;
        int n;
    };
    std::vector<Job> jobs{{"C2", -1}, {"AG4", -1}};
    for (Int n = 2; n <= cfg.mukai_max_n; ++n) jobs.push_back({"Mukai", static_cast<int>(n)});
    for (Int n = 1; n <= cfg.std_max_n; ++n) jobs.push_back({"Std", static_cast<int>(n)});

    std::vector<CaseReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    unsigned nw = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                  : std::max(1u, std::thread::hardware_concurrency());
    nw = std::min<unsigned>(nw, static_cast<unsigned>(jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nw; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) return;
                FlopCase c = load_case(jobs[k].name, jobs[k].n, cfg);
                reports[k] = verify_case(c, opt);
            }
        });
    for (auto& t : pool) t.join();

    std::sort(reports.begin(), reports.end(), [](const CaseReport& a, const CaseReport& b) {
        return a.case_name < b.case_name;
    });
    return reports;
}

}  // namespace flopcheck
