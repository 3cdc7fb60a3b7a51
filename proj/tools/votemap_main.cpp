#include "votemap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return votemap::run_cli(argc, argv, std::cout, std::cerr); }
