#include <iostream>

#include "abelkit/cli.hpp"

int main(int argc, char **argv)
{
    return abelkit::cli::run(argc, argv, std::cout, std::cerr);
}
