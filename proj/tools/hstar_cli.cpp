#include "hstar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hstar::cli::run(argc, argv, std::cout, std::cerr); }
