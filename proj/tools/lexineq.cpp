#include <iostream>
#include <string>
#include <vector>

#include "lexineq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lexineq::cli::run(args, std::cout, std::cerr);
}
