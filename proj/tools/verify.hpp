#pragma once

#include <string>
#include <vector>

namespace tamari {

struct CheckResult {
    std::string name;
    int n = 0;
    bool ok = false;
    std::string detail;
};

std::vector<CheckResult> verify_classical(int max_n, int jobs);
std::vector<CheckResult> verify_mtamari(int max_n, int m, int jobs);
std::vector<CheckResult> verify_oracles(int max_n, int m, int jobs);

}
