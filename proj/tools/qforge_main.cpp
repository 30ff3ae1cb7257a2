#include <iostream>
#include <string>
#include <vector>

#include "qforge/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return qforge::run(args, std::cout, std::cerr);
}
