// Runs the ten acceptance criteria at their full sizes and prints one line
// per criterion. Exit status is 0 only when every criterion passes within
// its time limit.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mouldlab/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char *title;
    std::vector<std::string> suites;
    double limit_seconds;
};

const std::vector<Criterion> &criteria()
{
    static const std::vector<Criterion> list = {
        {1, "operad and anticyclic axioms", {"operad", "anticyclic"}, 60},
        {2, "dendriform embedding", {"dend"}, 120},
        {3, "multi-residue criterion", {"residue"}, 60},
        {4, "non-crossing plant counts", {"ncp-counts"}, 120},
        {5, "plant operad", {"ncp-operad"}, 180},
        {6, "preservation and derivation", {"preservation", "derivation"}, 120},
        {7, "forgetful map", {"forgetful"}, 60},
        {8, "gallery consistency", {"gallery"}, 60},
        {9, "Tamari-interval evidence", {"tamari"}, 120},
        {10, "graded tridendriform relations", {"tridend"}, 30},
    };
    return list;
}

} // namespace

int main()
{
    mouldlab::VerifyOptions opts; // default seed and degree caps
    int failed = 0;
    for (const auto &c : criteria()) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string first_failure;
        std::size_t checks = 0;
        for (const auto &s : c.suites) {
            mouldlab::SuiteReport r = mouldlab::run_suite(s, opts);
            checks += r.checks.size();
            for (const auto &chk : r.checks)
                if (!chk.passed && first_failure.empty())
                    first_failure = s + ": " + chk.name + (chk.detail.empty() ? "" : " (" + chk.detail + ")");
            ok = ok && r.passed();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.limit_seconds;
        bool pass = ok && in_time && checks > 0;
        if (!pass)
            ++failed;
        std::printf("%s  criterion %2d  %-32s %4zu checks, exact  %7.2f s < %.0f s%s\n", pass ? "PASS" : "FAIL", c.id,
                    c.title, checks, secs, c.limit_seconds, in_time ? "" : "  (time limit exceeded)");
        if (!first_failure.empty())
            std::printf("      first failure: %s\n", first_failure.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failed, criteria().size());
    return failed == 0 ? 0 : 1;
}
