#include <iostream>
#include <string>
#include <vector>

#include "extremal/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return extremal::cli::run(args, std::cout, std::cerr);
}
