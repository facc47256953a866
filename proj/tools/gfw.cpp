#include <iostream>

#include "gfw/cli.hpp"

int main(int argc, char** argv) { return gfw::cli_main(argc, argv, std::cout, std::cerr); }
