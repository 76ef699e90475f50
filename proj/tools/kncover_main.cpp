#include <iostream>
#include <string>
#include <vector>

#include "kncover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kncover::run(args, std::cout, std::cerr, std::cin);
}
