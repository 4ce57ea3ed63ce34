// Resolves x^a t^b (x^m - t^n) by blow-ups and compares with the closed form.

#include "dcover/dcover.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 6) {
        std::cerr << "usage: resolve_family a b m n p\n";
        return 2;
    }
    const unsigned a = std::atoi(argv[1]), b = std::atoi(argv[2]);
    const unsigned m = std::atoi(argv[3]), n = std::atoi(argv[4]);
    const auto field = dcover::GaloisField::get(std::strtoull(argv[5], nullptr, 10));

    const dcover::BranchGerm germ(dcover::family_branch(field, a, b, m, n));
    const auto trace = dcover::canonical_resolution(germ);
    for (const auto& s : trace.steps) std::cout << s.center << "  m=" << s.m << " l=" << s.l << "\n";
    std::cout << "xi by blow-ups:  " << trace.xi << "\n";
    std::cout << "xi by recursion: " << dcover::xi_family({a, b, m, n}) << "\n";
    std::cout << "K2 defect:       " << trace.k2_defect << "\n";
}
