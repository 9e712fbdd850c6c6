#include "gcomp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gcomp::cli::run(args, std::cout, std::cerr);
}
