#include <iostream>

#include "liechar/cli.hpp"

int main(int argc, char** argv) { return liechar::run_cli(argc, argv, std::cout, std::cerr); }
