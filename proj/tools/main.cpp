#include <iostream>

#include "modspace/cli/run.hpp"

int main(int argc, char** argv) { return modspace::cli::run_cli(argc, argv, std::cout, std::cerr); }
