#pragma once

#include <string>
#include <vector>

#include "hofa/config.hpp"

namespace hofa {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full acceptance battery, printing one pass/fail line per
/// criterion to stdout when verbose. Artifacts land under outdir.
std::vector<CriterionResult> run_acceptance(const Config& cfg,
                                            const std::string& outdir,
                                            bool verbose = true);

/// Deterministic artifact battery exercising every module's emitters; used
/// by the determinism criterion and by the selftest output tree.
void write_artifact_tree(const Config& cfg, const std::string& dir);

}  // namespace hofa
