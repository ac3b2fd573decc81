// Acceptance run: one line per criterion, each evaluated at p = 5, 7, 11, 13
// with support length 8.  Exit status is 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sl2ext/verify.hpp"

using namespace sl2ext;

namespace {

struct Criterion {
    int number;
    const char* title;
    const char* suite;
};

const std::vector<Criterion> kCriteria{
    {1, "relator vanishing", "relators"},
    {2, "kernel membership", "kernel"},
    {3, "section identities", "sections"},
    {4, "associativity", "assoc"},
    {5, "involution laws", "involutions"},
    {6, "right-action regression", "rightaction"},
    {7, "duality", "duality"},
    {8, "cup independence", "cup-independent"},
    {9, "presentation round trip", "presentation"},
    {10, "E0 structure", "hecke"},
};

const std::vector<std::uint32_t> kPrimes{5, 7, 11, 13};

}  // namespace

int main() {
    VerifyConfig cfg;
    cfg.max_length = 8;
    cfg.samples = 1000;
    cfg.seed = 42;

    bool all = true;
    for (const Criterion& c : kCriteria) {
        bool ok = true;
        std::ostringstream detail, failures;
        const auto start = std::chrono::steady_clock::now();
        for (std::uint32_t p : kPrimes) {
            const Field f(p);
            FieldScope scope(f);
            const Report rep = run_suite(c.suite, cfg);
            std::uint64_t cases = 0;
            for (const Check& ch : rep.checks) {
                cases += ch.cases;
                if (!ch.pass) failures << "\n    p=" << p << " " << ch.name << ": " << ch.counterexample;
            }
            ok = ok && rep.all_pass();
            detail << " p=" << p << ":" << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << "("
                   << cases << ")";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " ["
                  << c.suite << "]" << detail.str() << " checks(cases), " << secs << " s" << failures.str()
                  << "\n";
        all = all && ok;
    }
    std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
    return all ? 0 : 1;
}
