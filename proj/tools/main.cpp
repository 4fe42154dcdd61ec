#include <iostream>

#include "boolgeo/cli.hpp"

int main(int argc, char** argv) {
    return boolgeo::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
