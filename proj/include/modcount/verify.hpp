/**
 * @file verify.hpp
 * @brief The full cross-check suite: one result per criterion, plus on-disk
 *        artifacts (the omega-0-4 coefficient diff and the asymptotic ratio
 *        report).
 */
#pragma once

#include <string>
#include <vector>

namespace modcount {

struct VerifyOptions {
    std::string artifact_dir = "verify_artifacts";
};

struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CriterionResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

VerifyReport run_verification(const VerifyOptions& options);

} // namespace modcount
