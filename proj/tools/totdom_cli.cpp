#include <iostream>

#include "totdom/harness.hpp"

int main(int argc, char** argv) { return totdom::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
