#include <iostream>

#include "odt/cli.hpp"

int main(int argc, char** argv) { return odt::run_cli(argc, argv, std::cout, std::cerr); }
