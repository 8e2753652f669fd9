#include "run.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return evidence::cli::run(argc, argv, std::cout, std::cerr);
}
