// Acceptance report: prints one PASS/FAIL line per criterion, then the
// failing checks. Every comparison is exact equality over the rationals (or
// Laurent polynomials in the weight); there is no numerical tolerance.
// Exit status is the number of failed criteria.

#include "postlie/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace postlie;
using Clock = std::chrono::steady_clock;

struct Limit
{
    std::string what;
    double seconds;  // 0: no time limit
};

struct Criterion
{
    int id;
    std::string title;
    std::vector<std::pair<Limit, std::function<Report()>>> parts;
};

struct Outcome
{
    bool passed = true;
    std::string timing;
    std::vector<std::string> failures;
};

Outcome run(const Criterion& c)
{
    Outcome out;
    for (const auto& [limit, body] : c.parts) {
        const auto start = Clock::now();
        const Report report = body();
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

        char buf[128];
        if (limit.seconds > 0)
            std::snprintf(buf, sizeof buf, "%s %.2f s (limit %.0f s)", limit.what.c_str(), elapsed, limit.seconds);
        else
            std::snprintf(buf, sizeof buf, "%s %.2f s", limit.what.c_str(), elapsed);
        out.timing += (out.timing.empty() ? "" : ", ") + std::string(buf);

        if (!report.passed()) {
            out.passed = false;
            for (const auto& check : report.checks())
                if (!check.passed)
                    out.failures.push_back(check.name + (check.detail.empty() ? "" : "  [" + check.detail + "]"));
            if (report.checks().empty())
                out.failures.push_back(limit.what + ": no checks ran");
        }
        if (limit.seconds > 0 && elapsed >= limit.seconds) {
            out.passed = false;
            out.failures.push_back(limit.what + " exceeded " + std::to_string(limit.seconds) + " s");
        }
    }
    return out;
}

} // namespace

int main()
{
    using namespace postlie::verify;

    const std::vector<Criterion> criteria = {
        {1, "post-Lie Magnus components 1..5 match the reference table",
         {{{"order 5", 5}, [] { return appendix_a(5); }}}},
        {2, "inverse post-Lie Magnus components 1..5 match the reference table",
         {{{"order 5", 5}, [] { return appendix_b(5); }}}},
        {3, "weighted BCH-recursion components 1..4 match the reference table",
         {{{"order 4", 0}, [] { return weighted(4); }}}},
        {4, "weight-1 BCH-recursion equals the post-Lie Magnus expansion, and its inverse the inverse",
         {{{"order 6", 30}, [] { return theorem(6); }}, {{"order 7", 300}, [] { return theorem(7); }}}},
        {5, "defining identities and both construction routes agree through order 7",
         {{{"order 7", 0}, [] { return round_trip(7); }}}},
        {6, "BCH table through degree 6, reference terms and word identities",
         {{{"order 6", 0}, [] { return bch(6); }}}},
        {7, "Hopf and post-Lie identities, associativity, both product formulas",
         {{{"hopf+glf order 6", 60}, [] {
               Report r = hopf(6);
               r.merge(glf(6));
               return r;
           }}}},
        {8, "matrix Rota-Baxter model: identities, exponential, derivatives, Spitzer",
         {{{"order 8, 100 samples", 60}, [] { return rb_model(8, 4, 1); }}}},
        {9, "Catalan forest counts through 6 and invertibility of Psi through 5",
         {{{"order 6", 0}, [] { return structure(6); }}}},
    };

    int failed = 0;
    std::vector<std::pair<int, std::vector<std::string>>> details;
    for (const auto& c : criteria) {
        const Outcome o = run(c);
        std::printf("criterion %d %s  %s  [%s]\n", c.id, o.passed ? "PASS" : "FAIL", c.title.c_str(),
                    o.timing.c_str());
        std::fflush(stdout);
        if (!o.passed) {
            ++failed;
            details.emplace_back(c.id, o.failures);
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    for (const auto& [id, failures] : details) {
        std::printf("criterion %d failures:\n", id);
        for (const auto& f : failures)
            std::printf("  %s\n", f.c_str());
    }
    return failed;
}
