#include <iostream>

#include "sandhi/cli.hpp"

int main(int argc, char** argv) { return sandhi::run(argc, argv, std::cout, std::cerr); }
