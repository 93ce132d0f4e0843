#include <iostream>
#include <string>
#include <vector>

#include "rr/cli.hpp"

int main(int argc, char** argv) {
    return rr::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
