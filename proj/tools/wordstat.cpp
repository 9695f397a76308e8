#include <iostream>

#include "wordstat/cli.hpp"

int main(int argc, char** argv) { return wordstat::run_cli(argc, argv, std::cout, std::cerr); }
