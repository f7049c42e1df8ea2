#include <iostream>
#include <string>
#include <vector>

#include "altfermat/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return altfermat::run_cli(args, std::cout, std::cerr);
}
