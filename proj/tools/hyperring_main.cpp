#include <iostream>
#include <string>
#include <vector>

#include "hyperring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::cout << hyperring::cli::kUsage;
        return args.empty() ? 2 : 0;
    }
    return hyperring::cli::run(args, std::cout, std::cerr);
}
