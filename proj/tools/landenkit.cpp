#include <iostream>
#include <string>
#include <vector>

#include "landenkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return landenkit::cli::run(args, std::cout, std::cerr);
}
