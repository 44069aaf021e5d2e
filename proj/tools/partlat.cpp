#include <iostream>

#include "partlat/cli.hpp"

int main(int argc, char** argv)
{
    return partlat::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
