#include <iostream>
#include <string>
#include <vector>

#include "fivefold/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return fivefold::run_cli(args, std::cout, std::cerr);
}
