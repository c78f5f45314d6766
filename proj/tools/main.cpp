#include <iostream>

#include "qsym/cli.hpp"

int main(int argc, char** argv) { return qsym::cli::run(argc, argv, std::cout, std::cerr); }
