#include <cstring>
#include <string>

#include "hofa/acceptance.hpp"

int main(int argc, char** argv) {
    std::string out = "acceptance_out";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--out") == 0) out = argv[i + 1];
    hofa::Config cfg;
    auto results = hofa::run_acceptance(cfg, out, true);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}
