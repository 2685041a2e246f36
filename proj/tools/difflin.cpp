#include <iostream>

#include "difflin/cli.hpp"

int main(int argc, char** argv) { return difflin::run_cli(argc, argv, std::cout, std::cerr); }
