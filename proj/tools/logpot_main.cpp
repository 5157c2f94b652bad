#include <iostream>

#include "logpot/cli.hpp"

int main(int argc, char** argv) { return logpot::cli_main(argc, argv, std::cout, std::cerr); }
