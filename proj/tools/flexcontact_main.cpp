#include "flexcontact/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return flexcontact::run_cli(argc, argv, std::cout, std::cerr); }
