#include <iostream>
#include <string>
#include <vector>

#include "addiword/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return addiword::run(args, std::cout, std::cerr);
}
