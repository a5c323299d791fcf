#include "hermitewave/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hermitewave::cli::run(argc, argv, std::cout, std::cerr); }
