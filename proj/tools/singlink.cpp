#include <iostream>

#include "singlink/cli.hpp"

int main(int argc, char** argv) { return singlink::run_cli(argc, argv, std::cout, std::cerr); }
