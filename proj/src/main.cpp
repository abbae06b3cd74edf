// SPDX-License-Identifier: MIT

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::string input;
    if (isatty(fileno(stdin)) == 0) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        input = ss.str();
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyadica::cli::run(args, input, std::cout);
}
