#include <iostream>
#include <vector>

#include "schwarz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schwarz::cli::run(args, std::cout, std::cerr);
}
