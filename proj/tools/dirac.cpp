#include "dirac/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return dirac::cli::main_entry(argc, argv, std::cout, std::cerr);
}
