#include <iostream>

#include "gradedexp/cli.hpp"

int main(int argc, char** argv) { return gradedexp::run_cli(argc, argv, std::cout, std::cerr); }
