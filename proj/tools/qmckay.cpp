#include "qmckay/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = qmckay::cli::run(args);
    if (res.payload.contains("help")) {
        std::cout << res.payload["help"].get<std::string>();
        return res.status;
    }
    std::cout << res.render() << "\n";
    return res.status;
}
