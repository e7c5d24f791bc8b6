#include "branchlab/catalog_io.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: gen_catalog OUT.json [max_n]\n";
        return 2;
    }
    int max_n = argc > 2 ? std::atoi(argv[2]) : 4;
    branchlab::save_catalog(argv[1], branchlab::all_cases(max_n), max_n);
    return 0;
}
