#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "vknot/cli.hpp"

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("VKNOT_THREADS")) {
        int n = std::atoi(cap);
        if (n > 0) omp_set_num_threads(std::min(n, omp_get_max_threads()));
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::fputs(vknot::cli::usage().c_str(), stderr);
        return vknot::cli::kUsageError;
    }
    vknot::cli::CommandResult result = vknot::cli::run(args);
    std::fputs(result.output.c_str(), result.exit_code == 0 ? stdout : stderr);
    return result.exit_code;
}
