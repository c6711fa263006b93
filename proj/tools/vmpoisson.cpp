#include <iostream>

#include "vmp/cli.hpp"

int main(int argc, char** argv) { return vmp::run_cli(argc, argv, std::cout, std::cerr); }
