#include <iostream>
#include <string>
#include <vector>

#include "logparadox/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return logparadox::cli::run(args, std::cout, std::cerr);
}
