#include <iostream>

#include <metacyclic/cli.hpp>

int main(int argc, char **argv) { return metacyclic::cli::run(argc, argv, std::cout, std::cerr); }
