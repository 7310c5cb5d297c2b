#include <iostream>
#include <string>
#include <vector>

#include "sesqui/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sesqui::cli::run(args, std::cin, std::cout, std::cerr);
}
