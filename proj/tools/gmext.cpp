#include <iostream>

#include "gmext/cli.hpp"

int main(int argc, char** argv) { return gmext::run_cli(argc, argv, std::cout, std::cerr); }
