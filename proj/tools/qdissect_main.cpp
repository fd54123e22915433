#include <iostream>

#include "qdissect/cli.hpp"

int main(int argc, char** argv) {
    return qdissect::run_cli(argc, argv, std::cout, std::cerr);
}
