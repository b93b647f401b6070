#include <iostream>

#include "asmorph/cli.hpp"

int main(int argc, char** argv) { return asmorph::cli::run(argc, argv, std::cout, std::cerr); }
