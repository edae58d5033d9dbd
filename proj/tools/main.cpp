#include "loopkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return loopkit::run_cli(std::move(args));
}
