#include <iostream>
#include <string>
#include <vector>

#include "complements/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = complements::cli::run(args, complements::cli::RunOptions::from_environment());
    std::cout << complements::cli::render(result);
    if (!result.ok) {
        std::cerr << "error: " << result.payload["error"]["message"].get<std::string>() << '\n';
        if (result.text) std::cerr << *result.text;
    }
    return static_cast<int>(result.exit_code);
}
