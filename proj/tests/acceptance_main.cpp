// Acceptance suite: runs every verification criterion and prints one
// PASS/FAIL line per criterion. Exit code 0 iff everything passed.

#include "modcount/verify.hpp"

#include <cstdio>

int main() {
    modcount::VerifyOptions options;
    options.artifact_dir = "acceptance_artifacts";
    modcount::VerifyReport report = modcount::run_verification(options);
    for (const auto& r : report.results)
        std::printf("%s  %-28s (%6.1fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.seconds,
                    r.detail.c_str());
    std::printf("%s\n", report.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    return report.all_pass() ? 0 : 1;
}
