#include <iostream>

#include "mdsforge/cli.hpp"

int main(int argc, char** argv) { return mdsforge::run_cli(argc, argv, std::cout, std::cerr); }
