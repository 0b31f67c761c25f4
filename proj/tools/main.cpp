#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return fragile::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
