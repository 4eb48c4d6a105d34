#include <iostream>

#include "ssiwasawa_cli/cli.hpp"

int main(int argc, char** argv) { return ssiw::cli::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
