#include <iostream>

#include "multisign/cli.hpp"

int main(int argc, char** argv) {
    return multisign::cli::run(argc, argv, std::cout, std::cerr);
}
