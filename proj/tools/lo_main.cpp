#include "lo_cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return run_cli(argc, argv, std::cout, std::cerr);
}
