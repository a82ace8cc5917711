#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sa/rost.hpp"

namespace sa {

// One row of the per-place table. Inner rows carry the local modulus m_v,
// outer rows the ramification type and the known image descriptor.
struct LocalRow {
    std::string id;
    std::int64_t degree = 1;
    bool in_excluded = false;
    std::optional<std::int64_t> m_v;
    std::optional<std::int64_t> local_group_order;
    std::optional<std::string> ramification;
    std::optional<std::string> rost_image;

    friend bool operator==(const LocalRow&, const LocalRow&) = default;
};

struct DefectGroup {
    std::int64_t order = 1;
    std::string generator;  // "trivial" or "k*R_H"

    friend bool operator==(const DefectGroup&, const DefectGroup&) = default;
};

struct WitnessOut {
    std::string place;
    std::int64_t value = 0;
    std::int64_t modulus = 1;
    std::optional<std::int64_t> contribution_order;  // outer mode only

    friend bool operator==(const WitnessOut&, const WitnessOut&) = default;
};

// Everything one scenario evaluation produces. Rendering to json and
// parsing back is the identity on this struct.
struct Report {
    std::string name;
    std::string mode;  // "inner" or "outer"

    std::optional<bool> holds;                 // inner
    std::optional<std::int64_t> defect_order;  // inner
    std::optional<DefectGroup> defect_group;   // inner

    std::optional<bool> failure_proven;        // outer
    std::optional<std::string> outer_reason;   // outer

    std::vector<LocalRow> local_table;
    std::optional<WitnessOut> witness;
    std::optional<std::string> witness_note;
    std::optional<ExactnessReport> oracle;

    friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { text, json };

// text is a fixed-layout table; json uses stable, alphabetically ordered
// keys, so identical reports render byte-identically.
std::string render(const Report& r, Format format);

// Inverse of render(, Format::json).
Report parse_report(const std::string& json_text);

}  // namespace sa
