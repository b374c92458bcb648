#include "symfunc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symfunc::cli::run(args, std::cin, std::cout, std::cerr);
}
