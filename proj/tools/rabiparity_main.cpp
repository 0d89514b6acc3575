#include <iostream>

#include "rabiparity/cli.hpp"

int main(int argc, char** argv) { return rabiparity::cli::run(argc, argv, std::cout, std::cerr); }
