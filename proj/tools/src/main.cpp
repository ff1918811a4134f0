#include <iostream>

#include "edgeideal_cli/cli.hpp"

int main(int argc, char** argv) { return edgeideal::cli::run(argc, argv, std::cout, std::cerr); }
