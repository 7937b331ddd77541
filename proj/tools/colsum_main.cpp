#include <iostream>

#include "colsum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return colsum::run_cli(args, std::cout, std::cerr);
}
