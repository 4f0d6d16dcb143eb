#include <iostream>

#include "nilc/cli.hpp"

int main(int argc, char** argv) { return nilc::run_cli(argc, argv, std::cout, std::cerr); }
