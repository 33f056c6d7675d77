#include <iostream>

#include "mocs/cli.hpp"

int main(int argc, char** argv) { return mocs::cli::main_entry(argc, argv, std::cout, std::cerr); }
