#include <iostream>
#include <string>
#include <vector>

#include "s3modes/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return s3modes::cli::run(args, std::cout, std::cerr);
}
