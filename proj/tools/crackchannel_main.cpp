#include <iostream>
#include <string>
#include <vector>

#include "crackchannel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return crackchannel::run_cli(args, std::cout, std::cerr);
}
