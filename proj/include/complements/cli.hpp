#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complements/io.hpp"

namespace complements::cli {

enum class ExitCode : int { ok = 0, failure = 1, usage = 2, malformed_input = 3, domain = 4 };

struct CommandResult {
    bool ok = true;
    io::json payload = io::json::object();
    std::vector<std::string> diagnostics;
    ExitCode exit_code = ExitCode::ok;
    /// Help or usage text; when set it replaces the JSON output.
    std::optional<std::string> text;
    /// Render as a human-readable table instead of JSON.
    bool table = false;
};

struct RunOptions {
    /// Default n-search cap; COMPLEMENT_SEARCH_CAP overrides it.
    long search_cap = kDefaultSearchCapForCli;
    std::string data_dir;

    static constexpr long kDefaultSearchCapForCli = 100;
    static RunOptions from_environment();
};

/// Dispatches argv (without the program name) to the owning module.
CommandResult run(const std::vector<std::string>& args, const RunOptions& options);

/// Bytes written to stdout for a result: the payload as JSON (diagnostics
/// folded in under "diagnostics"), an error object, a table, or help text.
std::string render(const CommandResult& result);

}  // namespace complements::cli
