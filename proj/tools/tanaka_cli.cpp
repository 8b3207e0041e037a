#include "tanaka/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tanaka::run(argc, argv, std::cout, std::cerr); }
