#include <iostream>

#include "vkb/cli.hpp"

int main(int argc, char** argv) { return vkb::cli::run(argc, argv, std::cout, std::cerr); }
