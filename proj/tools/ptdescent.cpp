#include <iostream>

#include "ptdescent/cli.hpp"

int main(int argc, char** argv) { return ptdescent::cli_main(argc, argv, std::cout, std::cerr); }
