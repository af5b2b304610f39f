// SPDX-License-Identifier: Apache-2.0
#include <softmatrix/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return softmatrix::cli::run_cli(argc, argv, std::cout, std::cerr);
}
