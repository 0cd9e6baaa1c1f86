#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tpb::cli_main(argc, argv, std::cout, std::cerr); }
