#pragma once

#include <string>
#include <vector>

namespace vmp {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0;
    double seconds = 0;
    std::string detail;
};

struct VerifyConfig {
    int oracle_N_max = 3;  // oracle-vs-formula range
    int oracle_n_max = 8;
    double quad_tol = 1e-6;
};

// The acceptance suite: one result per criterion, in order.
std::vector<CheckResult> run_acceptance(const VerifyConfig& cfg = {});

}  // namespace vmp
