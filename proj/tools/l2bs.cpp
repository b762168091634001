#include <iostream>
#include <string>
#include <vector>

#include "l2bs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return l2bs::run_cli(args, std::cout, std::cerr);
}
