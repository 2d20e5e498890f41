#include <iostream>

#include "qcy/cli.hpp"

int main(int argc, char** argv) { return qcy::cli::run(argc, argv, std::cout, std::cerr); }
