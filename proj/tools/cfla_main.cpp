#include <iostream>

#include "cfla/harness/cli.hpp"

int main(int argc, char** argv) { return cfla::harness::run_cli(argc, argv, std::cout, std::cerr); }
