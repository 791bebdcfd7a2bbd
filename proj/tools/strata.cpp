#include "strata/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return strata::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
