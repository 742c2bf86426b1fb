#include <iostream>

#include "gcf_forge/cli.hpp"

int main(int argc, char** argv) { return gcf_forge::run_cli(argc, argv, std::cout, std::cerr); }
