#include <iostream>

#include "scmap/cli.hpp"

int main(int argc, char** argv)
{
    const auto parsed = scmap::parse_args(argc, argv, std::cout, std::cerr);
    if (!parsed.config)
        return parsed.exit_code;
    return scmap::run(*parsed.config, std::cout, std::cerr);
}
