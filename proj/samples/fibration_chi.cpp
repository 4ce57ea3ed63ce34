// Reads a fibration datum and prints chi of the smooth model against the bound.

#include "dcover/dcover.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: fibration_chi datum.json\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    const auto datum = dcover::parse_datum(text);
    const auto report = dcover::validate(datum);
    if (!report.ok()) {
        std::cerr << report.first_failure() << "\n";
        return 1;
    }
    const auto e = dcover::evidence_bound_check(datum);
    std::cout << "alpha=" << dcover::alpha_of(datum) << " d=" << dcover::d_of(datum) << "\n";
    std::cout << "chi(X0)=" << dcover::chi_normalized_cover(datum).str() << " chi(X)=" << e.chi.str()
              << " bound=" << e.bound.str() << (e.pass ? " ok" : " FAILS") << "\n";
}
