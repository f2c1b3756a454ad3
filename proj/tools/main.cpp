#include <iostream>

#include "lfactor/cli.hpp"

int main(int argc, char** argv) { return lfac::run_cli(argc, argv, std::cout, std::cerr); }
