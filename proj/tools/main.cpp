#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return bsynth::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
