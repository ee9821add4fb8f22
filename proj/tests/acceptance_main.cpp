// Acceptance runner: one PASS/FAIL line per criterion. Optional arguments select criteria by id;
// --json writes the full reports to the given file.
#include "qmckay/acceptance.hpp"

#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::vector<int> ids;
    std::string json_path;
    for (int k = 1; k < argc; ++k) {
        std::string a = argv[k];
        if (a == "--json" && k + 1 < argc) json_path = argv[++k];
        else ids.push_back(std::stoi(a));
    }
    if (ids.empty()) ids = qmckay::acceptance_ids();
    nlohmann::json all = nlohmann::json::array();
    int failures = 0;
    for (int id : ids) {
        qmckay::CriterionResult r;
        try {
            r = qmckay::run_criterion(id);
        } catch (const std::exception& e) {
            r.id = id;
            r.title = "internal error";
            r.summary = e.what();
        }
        std::cout << r.line() << std::endl;
        if (!r.pass()) ++failures;
        all.push_back(r.to_json());
    }
    if (!json_path.empty()) std::ofstream(json_path) << all.dump(2) << "\n";
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) fail") << "\n";
    return failures == 0 ? 0 : 1;
}
