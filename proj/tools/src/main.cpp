#include <iostream>

#include "soficonv_cli/cli.hpp"

int main(int argc, char** argv) { return soficonv::cli::dispatch(argc, argv, std::cout, std::cerr); }
