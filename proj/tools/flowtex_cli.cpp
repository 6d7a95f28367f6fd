#include <iostream>

#include "flowtex/cli.hpp"

int main(int argc, char** argv) { return flowtex::run_cli(argc, argv, std::cout, std::cerr); }
