#include <iostream>

#include "trigspline/cli/run.hpp"

int main(int argc, char** argv) { return trigspline::cli::run_main(argc, argv, std::cout, std::cerr); }
