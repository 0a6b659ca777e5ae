#include "logtan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return logtan::cli::run(argc, argv, std::cout, std::cerr); }
