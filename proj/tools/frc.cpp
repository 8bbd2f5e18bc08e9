#include <iostream>

#include "frc/cli.hpp"

int main(int argc, char** argv) {
    return frc::cli::run(argc, argv, std::cout, std::cerr);
}
