#include "dcover/cli.hpp"

int main(int argc, char** argv) {
    return dcover::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
