#include <cstdio>

#include <addact/verify.hpp>

int main() {
    bool all = true;
    for (const auto& r : addact::run_all_criteria()) {
        std::printf("%s %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
