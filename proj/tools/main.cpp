#include <iostream>

#include "jcd/cli.hpp"

int main(int argc, char** argv) { return jcd::cli::run(argc, argv, std::cout, std::cerr); }
