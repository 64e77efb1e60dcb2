#include <iostream>

#include "jlf/cli.hpp"

int main(int argc, char** argv) { return jlf::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
