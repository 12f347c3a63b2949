#include <iostream>

#include "app/cli.hpp"

int main(int argc, char** argv) { return ndagg::app::runCli(argc, argv, std::cout, std::cerr); }
