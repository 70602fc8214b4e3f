#ifndef GM_SCENARIOS_HPP
#define GM_SCENARIOS_HPP

#include <string>
#include <vector>

// End-to-end verification scenarios used both by `gm verify` and the
// acceptance test binary.  Each scenario has a wall-clock budget; exceeding
// it fails the scenario.
namespace gm::scenarios {

struct ScenarioResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<std::string> scenario_ids();          // "1" .. "10"
std::string scenario_title(const std::string& id);
double scenario_time_limit(const std::string& id);  // seconds

// Runs one scenario (throws std::invalid_argument for unknown ids).
ScenarioResult run_scenario(const std::string& id);

std::vector<ScenarioResult> run_all_scenarios();

}  // namespace gm::scenarios

#endif
