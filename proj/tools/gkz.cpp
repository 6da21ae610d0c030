#include <iostream>

#include "gkz/cli/commands.hpp"

int main(int argc, char** argv) { return gkz::cli::run(argc, argv, std::cout, std::cerr); }
