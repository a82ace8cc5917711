#include "sa/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace sa {

namespace {

using nlohmann::json;

json oracle_to_json(const ExactnessReport& o) {
    json j;
    j["pass"] = o.pass;
    j["label"] = o.label;
    j["support"] = o.support;
    j["tuples"] = o.tuples;
    j["global_count"] = o.global_count;
    j["covered_defect_values"] = o.covered_defect_values;
    j["defect_order"] = o.defect_order;
    j["failure"] = o.failure;
    j["counterexample"] = o.counterexample ? json(*o.counterexample) : json(nullptr);
    return j;
}

ExactnessReport oracle_from_json(const json& j) {
    ExactnessReport o;
    o.pass = j.at("pass").get<bool>();
    o.label = j.at("label").get<std::string>();
    o.support = j.at("support").get<std::vector<std::string>>();
    o.tuples = j.at("tuples").get<std::int64_t>();
    o.global_count = j.at("global_count").get<std::int64_t>();
    o.covered_defect_values = j.at("covered_defect_values").get<std::vector<std::int64_t>>();
    o.defect_order = j.at("defect_order").get<std::int64_t>();
    o.failure = j.at("failure").get<std::string>();
    if (!j.at("counterexample").is_null())
        o.counterexample = j.at("counterexample").get<std::vector<std::int64_t>>();
    return o;
}

json row_to_json(const LocalRow& row) {
    json j;
    j["id"] = row.id;
    j["degree"] = row.degree;
    j["in_s"] = row.in_excluded;
    if (row.m_v) j["m_v"] = *row.m_v;
    if (row.local_group_order) j["local_group_order"] = *row.local_group_order;
    if (row.ramification) j["ramification"] = *row.ramification;
    if (row.rost_image) j["rost_image"] = *row.rost_image;
    return j;
}

LocalRow row_from_json(const json& j) {
    LocalRow row;
    row.id = j.at("id").get<std::string>();
    row.degree = j.at("degree").get<std::int64_t>();
    row.in_excluded = j.at("in_s").get<bool>();
    if (j.contains("m_v")) row.m_v = j.at("m_v").get<std::int64_t>();
    if (j.contains("local_group_order"))
        row.local_group_order = j.at("local_group_order").get<std::int64_t>();
    if (j.contains("ramification")) row.ramification = j.at("ramification").get<std::string>();
    if (j.contains("rost_image")) row.rost_image = j.at("rost_image").get<std::string>();
    return row;
}

std::string render_json(const Report& r) {
    json out;
    out["name"] = r.name;
    out["mode"] = r.mode;
    json verdict;
    if (r.mode == "inner") {
        verdict["holds"] = r.holds.value();
        verdict["defect_order"] = r.defect_order.value();
    } else {
        verdict["failure_proven"] = r.failure_proven.value();
        verdict["reason"] = r.outer_reason.value_or("");
    }
    out["verdict"] = verdict;
    out["defect_order"] = r.defect_order ? json(*r.defect_order) : json(nullptr);
    if (r.defect_group) {
        json g;
        g["order"] = r.defect_group->order;
        g["generator"] = r.defect_group->generator;
        out["defect_group"] = g;
    } else {
        out["defect_group"] = nullptr;
    }
    json table = json::array();
    for (const auto& row : r.local_table) table.push_back(row_to_json(row));
    out["local_table"] = table;
    if (r.witness) {
        json w;
        w["place"] = r.witness->place;
        w["value"] = r.witness->value;
        w["modulus"] = r.witness->modulus;
        if (r.witness->contribution_order) w["contribution_order"] = *r.witness->contribution_order;
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    out["witness_note"] = r.witness_note ? json(*r.witness_note) : json(nullptr);
    out["oracle"] = r.oracle ? oracle_to_json(*r.oracle) : json(nullptr);
    return out.dump(2) + "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "scenario: " << r.name << "\n";
    out << "mode: " << r.mode << "\n";
    if (r.mode == "inner") {
        if (r.holds.value())
            out << "verdict: strong approximation away from S HOLDS (defect group trivial)\n";
        else
            out << "verdict: strong approximation away from S FAILS (defect order "
                << r.defect_order.value() << ")\n";
        out << "defect group: Z/" << r.defect_group->order << ", dual generator "
            << r.defect_group->generator << "\n";
    } else {
        if (r.failure_proven.value())
            out << "verdict: failure of strong approximation away from S is PROVEN\n";
        else
            out << "verdict: criterion INAPPLICABLE; this does not prove strong approximation "
                   "holds\n";
        if (!r.outer_reason.value_or("").empty())
            out << "reason: " << *r.outer_reason << "\n";
    }

    std::size_t id_width = 5;
    for (const auto& row : r.local_table) id_width = std::max(id_width, row.id.size());
    out << "local table:\n";
    if (r.mode == "inner") {
        out << "  " << std::left << std::setw(static_cast<int>(id_width + 2)) << "place"
            << std::right << std::setw(6) << "deg" << std::setw(6) << "m_v" << std::setw(7)
            << "|H^1|" << "  in S\n";
        for (const auto& row : r.local_table) {
            out << "  " << std::left << std::setw(static_cast<int>(id_width + 2)) << row.id
                << std::right << std::setw(6) << row.degree << std::setw(6) << row.m_v.value()
                << std::setw(7) << row.local_group_order.value() << "  " << yes_no(row.in_excluded)
                << "\n";
        }
    } else {
        out << "  " << std::left << std::setw(static_cast<int>(id_width + 2)) << "place"
            << std::right << std::setw(6) << "deg" << "  " << std::left << std::setw(10) << "type"
            << std::setw(13) << "2R_H image" << std::setw(7) << "|H^1|" << "in S\n";
        for (const auto& row : r.local_table) {
            std::string order =
                row.local_group_order ? std::to_string(*row.local_group_order) : "-";
            out << "  " << std::left << std::setw(static_cast<int>(id_width + 2)) << row.id
                << std::right << std::setw(6) << row.degree << "  " << std::left << std::setw(10)
                << row.ramification.value_or("-") << std::setw(13) << row.rost_image.value_or("-")
                << std::setw(7) << order << yes_no(row.in_excluded) << "\n";
        }
    }

    if (r.witness) {
        out << "witness: place " << r.witness->place << ", value " << r.witness->value << " (mod "
            << r.witness->modulus << ")";
        if (r.witness->contribution_order)
            out << ", contribution order " << *r.witness->contribution_order
                << " (S contributions are bounded by 2)";
        out << "\n";
    }
    if (r.witness_note) out << "witness note: " << *r.witness_note << "\n";
    if (r.oracle) {
        const ExactnessReport& o = *r.oracle;
        out << "oracle: " << o.label << " " << (o.pass ? "PASS" : "FAIL") << " (tuples "
            << o.tuples << ", global " << o.global_count << ", defect values covered "
            << o.covered_defect_values.size() << " of " << o.defect_order << ")\n";
        if (!o.pass) {
            out << "oracle failure: " << o.failure << "\n";
            if (o.counterexample) {
                out << "oracle counterexample:";
                for (std::size_t i = 0; i < o.counterexample->size(); ++i)
                    out << " " << o.support[i] << "=" << (*o.counterexample)[i];
                out << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace

std::string render(const Report& r, Format format) {
    return format == Format::json ? render_json(r) : render_text(r);
}

Report parse_report(const std::string& json_text) {
    json j = json::parse(json_text);
    Report r;
    r.name = j.at("name").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    const json& verdict = j.at("verdict");
    if (r.mode == "inner") {
        r.holds = verdict.at("holds").get<bool>();
        r.defect_order = verdict.at("defect_order").get<std::int64_t>();
    } else {
        r.failure_proven = verdict.at("failure_proven").get<bool>();
        r.outer_reason = verdict.at("reason").get<std::string>();
    }
    if (!j.at("defect_group").is_null()) {
        const json& g = j.at("defect_group");
        r.defect_group =
            DefectGroup{g.at("order").get<std::int64_t>(), g.at("generator").get<std::string>()};
    }
    for (const auto& row : j.at("local_table")) r.local_table.push_back(row_from_json(row));
    if (!j.at("witness").is_null()) {
        const json& w = j.at("witness");
        WitnessOut witness;
        witness.place = w.at("place").get<std::string>();
        witness.value = w.at("value").get<std::int64_t>();
        witness.modulus = w.at("modulus").get<std::int64_t>();
        if (w.contains("contribution_order"))
            witness.contribution_order = w.at("contribution_order").get<std::int64_t>();
        r.witness = witness;
    }
    if (!j.at("witness_note").is_null()) r.witness_note = j.at("witness_note").get<std::string>();
    if (!j.at("oracle").is_null()) r.oracle = oracle_from_json(j.at("oracle"));
    return r;
}

}  // namespace sa
