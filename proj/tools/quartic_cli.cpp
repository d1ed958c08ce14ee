#include <iostream>
#include <string>
#include <vector>

#include "quartic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quartic::cli_run(args, std::cout, std::cerr);
}
