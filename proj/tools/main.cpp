#include <iostream>

#include "tough/cli.hpp"

int main(int argc, char** argv)
{
    return tough::run_cli(argc, argv, std::cout, std::cerr);
}
