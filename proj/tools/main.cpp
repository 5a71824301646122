#include <iostream>

#include "lotwise/cli.hpp"

int main(int argc, char** argv) { return lotwise::run_cli(argc, argv, std::cout, std::cerr); }
