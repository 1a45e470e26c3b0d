#include <iostream>

#include "qtwist/cli/app.hpp"

int main(int argc, char** argv) { return qtwist::cli::run(argc, argv, std::cout, std::cerr); }
