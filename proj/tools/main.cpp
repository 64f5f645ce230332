#include "netsparse/cli.hpp"

int main(int argc, char** argv) {
    return netsparse::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
