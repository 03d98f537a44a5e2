#include <iostream>
#include <string>
#include <vector>

#include "seqtool/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return seqtool::run_seqtool(args, std::cout, std::cerr);
}
