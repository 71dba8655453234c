#include <iostream>

#include "glcaps/cli.hpp"

int main(int argc, char** argv) { return glcaps::run_cli(argc, argv, std::cout, std::cerr); }
