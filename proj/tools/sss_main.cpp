#include <iostream>

#include "sss/cli.hpp"

int main(int argc, char** argv) { return sss::run_cli(argc, argv, std::cout, std::cerr); }
