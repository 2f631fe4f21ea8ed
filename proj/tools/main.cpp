#include <iostream>
#include <string>
#include <vector>

#include "revolve/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return revolve::cli::run(args, std::cout, std::cerr);
}
