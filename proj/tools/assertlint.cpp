#include <iostream>

#include "assertlint/cli.hpp"

int main(int argc, char** argv) { return assertlint::run_cli(argc, argv, std::cout, std::cerr); }
