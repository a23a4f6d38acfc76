#include <iostream>

#include "fubench/cli.hpp"

int main(int argc, char** argv) { return fubench::run_cli(argc, argv, std::cout, std::cerr); }
