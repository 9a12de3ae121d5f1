#include <iostream>

#include "hexcut/cli.hpp"

int main(int argc, char** argv) { return hexcut::cli::run_cli(argc, argv, std::cout, std::cerr); }
