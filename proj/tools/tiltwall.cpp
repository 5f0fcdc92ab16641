#include "tiltwall/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tiltwall::run(argc, argv, std::cout, std::cerr); }
