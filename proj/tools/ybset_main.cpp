#include <iostream>
#include <string>
#include <vector>

#include "ybset/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ybset::run_cli(args, std::cout, std::cerr);
}
