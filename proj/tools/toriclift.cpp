#include "toriclift/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return toriclift::run_cli(argc, argv, std::cout, std::cerr); }
