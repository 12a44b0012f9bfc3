#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dirac2d::cli::run(argc, argv, std::cout, std::cerr); }
