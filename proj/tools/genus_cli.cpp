#include <iostream>

#include "genus/cli.hpp"

int main(int argc, char** argv) { return genus::cli::run(argc, argv, std::cout, std::cerr); }
