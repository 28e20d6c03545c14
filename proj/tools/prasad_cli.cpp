#include <iostream>

#include "prasad/cli.hpp"

int main(int argc, char** argv) { return prasad::run_cli(argc, argv, std::cout, std::cerr); }
