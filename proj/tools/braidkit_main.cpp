#include <string>
#include <vector>

#include "braidkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int t = 1; t < argc; ++t) args.emplace_back(argv[t]);
    return braidkit::cli_main(args);
}
