#include <iostream>

#include "osfol/cli.hpp"

int main(int argc, char** argv) { return osfol::cli_main(argc, argv, std::cout, std::cerr); }
