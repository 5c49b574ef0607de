#include "gfano/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gfano::cli::main_entry(argc, argv, std::cout, std::cerr); }
