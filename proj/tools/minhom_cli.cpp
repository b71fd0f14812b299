#include <minhom/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return minhom::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
