#include <iostream>
#include <string>
#include <vector>

#include "excomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return excomp::cli::run(args, std::cout, std::cerr);
}
