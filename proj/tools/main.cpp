#include <iostream>

#include "simtri/cli.hpp"

int main(int argc, char** argv) { return simtri::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
