/// @file cli.hpp
/// @brief Command dispatch for the qmckay tool; JSON payloads with a pretty renderer.
#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qmckay::cli {

class usage_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum ExitStatus { ok = 0, verify_failed = 1, usage = 2, internal = 3 };

struct CommandResult {
    std::vector<std::string> command;
    nlohmann::json payload;
    int status = ok;
    bool pretty = false;

    nlohmann::json to_json() const;
    // Canonical JSON (sorted keys), or indented with RSLaurent values in human notation.
    std::string render() const;
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// rs_str-encoded strings replaced by rs_pretty, recursively.
nlohmann::json prettify(const nlohmann::json& j);

}  // namespace qmckay::cli
