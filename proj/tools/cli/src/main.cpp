#include <iostream>

#include "hyperverify/cli/app.hpp"

int main(int argc, char** argv) { return hyperverify::cli::run(argc, argv, std::cout, std::cerr); }
