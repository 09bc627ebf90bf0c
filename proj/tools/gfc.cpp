#include "gfc/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gfc::run_cli(argc, argv, std::cout, std::cerr);
}
