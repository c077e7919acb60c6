#include <iostream>

#include "ribbon3/cli.hpp"

int main(int argc, char** argv) { return ribbon3::cli::run(argc, argv, std::cout, std::cerr); }
