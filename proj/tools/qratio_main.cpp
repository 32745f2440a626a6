#include <iostream>

#include "qratio/cli.hpp"

int main(int argc, char** argv) {
    return qratio::cli::run(argc, argv, std::cout, std::cerr);
}
