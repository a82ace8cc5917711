#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sa/outer.hpp"
#include "sa/report.hpp"
#include "sa/rost.hpp"

namespace sa {

// Parameters for the enumeration oracle, when a scenario pins them down.
struct OracleSpec {
    std::vector<std::string> support;
    std::int64_t budget = 1000000;

    friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

// A scenario file, parsed and model-checked. mode "inner" requires the
// constant class; mode "outer" requires the extension and local data.
struct Scenario {
    std::string name;
    std::string mode;  // "inner" or "outer"
    Curve curve;
    std::optional<BrauerClass> brauer;
    std::set<std::string> excluded;
    bool has_primitive_root = false;
    std::optional<QuadExtension> extension;
    std::map<std::string, LocalUnitaryData> local_data;
    std::optional<OracleSpec> oracle;
};

// Reads and validates a scenario file (json).
Scenario load_scenario(const std::string& path);

// Same, from file contents. Validation failures carry the field path.
Scenario parse_scenario(const std::string& json_text);

// Re-runs the model construction (problem objects included) without
// deciding anything. Throws on invalid scenarios.
void validate_scenario(const Scenario& s);

struct RunOptions {
    bool with_oracle = false;
    int oracle_workers = 0;  // 0 = automatic
};

// Evaluates a scenario end to end. Identical scenario input yields an
// identical Report, independent of oracle worker count.
Report run_scenario(const Scenario& s, const RunOptions& options = {});

}  // namespace sa
