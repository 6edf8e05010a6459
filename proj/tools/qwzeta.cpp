#include <iostream>

#include "qwzeta/commands.hpp"

int main(int argc, char** argv) { return qwzeta::run_cli(argc, argv, std::cout, std::cerr); }
