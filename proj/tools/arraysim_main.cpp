// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "arraysim/run.hpp"

int main(int argc, char **argv) {
    return arraysim::cli_main(argc, argv, std::cout, std::cerr);
}
