#include <cstdio>

#include "bifactor/cli.hpp"

int main(int argc, char** argv) {
    bifactor::cli::CommandResult result =
        bifactor::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::fputs(result.output.c_str(), stdout);
    std::fputs(result.diagnostics.c_str(), stderr);
    return result.exit_code;
}
