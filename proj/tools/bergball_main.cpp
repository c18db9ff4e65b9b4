#include <iostream>
#include <string>
#include <vector>

#include "bergball/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bergball::run_command(args, std::cout, std::cerr);
}
