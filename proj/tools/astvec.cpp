#include <iostream>

#include "astvec/cli.hpp"

int main(int argc, char** argv) { return astvec::run_cli(argc, argv, std::cout, std::cerr); }
