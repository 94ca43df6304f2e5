#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "dtroots/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return dtroots::cli::dispatch(args, std::cin, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
