#include <iostream>
#include <string>
#include <vector>

#include "nodaljac/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nodaljac::cli_dispatch(std::move(args), std::cout, std::cerr);
}
