#include <iostream>
#include <string>
#include <vector>

#include "tusi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tusi::run_cli(args, std::cout, std::cerr);
}
