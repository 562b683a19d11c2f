#include <iostream>

#include "pinnacle/cli.hpp"

int main(int argc, char **argv) { return pinnacle::cli::main_entry(argc, argv, std::cout, std::cerr); }
