#include "fcrs/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fcrs::cli::dispatch(argc, argv, std::cout, std::cerr); }
