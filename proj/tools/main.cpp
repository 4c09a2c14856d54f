#include <iostream>

#include "spherelab/cli.hpp"

int main(int argc, char** argv) { return spherelab::cli::main_entry(argc, argv, std::cout, std::cerr); }
