#include <iostream>
#include <string>
#include <vector>

#include "dup23/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dup23::run_cli(args, std::cout, std::cerr);
}
