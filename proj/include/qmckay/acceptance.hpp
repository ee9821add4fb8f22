/// @file acceptance.hpp
/// @brief Numbered acceptance criteria with pinned windows and wall-clock limits.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace qmckay {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool exact_pass = false;  // every identity in the window held
    double seconds = 0;
    double limit_seconds = 0;
    std::string summary;
    nlohmann::json detail = nlohmann::json::object();

    bool within_limit() const { return seconds < limit_seconds; }
    bool pass() const { return exact_pass && within_limit(); }
    // "criterion 7 FAIL [212.4s < 600s] ..." on one line
    std::string line() const;
    nlohmann::json to_json() const;
};

const std::vector<int>& acceptance_ids();
CriterionResult run_criterion(int id);

}  // namespace qmckay
