#include <iostream>

#include "semiaffine/cli.hpp"

int main(int argc, char** argv) {
    return semiaffine::run_cli(argc, argv, std::cout, std::cerr);
}
