#include <iostream>

#include "spinorbit/cli.hpp"

int main(int argc, char **argv) { return spinorbit::cli::run(argc, argv, std::cout, std::cerr); }
