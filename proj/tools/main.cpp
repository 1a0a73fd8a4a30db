#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return stag::cli::run(argc, argv, std::cout, std::cerr); }
