// Placeholder CLI; replaced once the library is in place.
#include "riffle/coxeter.hpp"
#include <iostream>
int main(int argc, char** argv) {
    std::string type = argc > 1 ? argv[1] : "G2";
    auto W = riffle::CoxeterGroup::build(type);
    std::cout << W.label << ": |W|=" << W.order << " roots=" << W.nroots << " exponents=";
    for (int m : W.exponents) std::cout << m << " ";
    std::cout << "\n";
    return 0;
}
