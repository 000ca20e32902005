#include <iostream>

#include "decoshell/cli.hpp"

int main(int argc, char** argv) { return decoshell::run_cli(argc, argv, std::cout, std::cerr); }
