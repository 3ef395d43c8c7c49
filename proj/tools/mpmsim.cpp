// SPDX-License-Identifier: Apache-2.0

#include "mpm/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mpm::run_cli(argc, argv, std::cout, std::cerr);
}
