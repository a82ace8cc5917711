#include "sa/scenario.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace sa {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw validation_error(path, "expected an object");
    if (!j.contains(key)) throw validation_error(path + "." + key, "missing required field");
    return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw validation_error(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw validation_error(path, "expected a string");
    return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw validation_error(path, "expected a boolean");
    return j.get<bool>();
}

Curve parse_curve(const json& j) {
    const std::int64_t index = as_int(require_field(j, "index", "curve"), "curve.index");

    Pic0Trivial pic0;
    const json& pj = require_field(j, "pic0_trivial_mod", "curve");
    if (pj.is_string()) {
        if (pj.get<std::string>() != "all")
            throw validation_error("curve.pic0_trivial_mod", "expected \"all\" or a list");
        pic0 = Pic0Trivial::every();
    } else if (pj.is_array()) {
        std::set<std::int64_t> moduli;
        for (std::size_t i = 0; i < pj.size(); ++i) {
            const std::int64_t m =
                as_int(pj[i], "curve.pic0_trivial_mod[" + std::to_string(i) + "]");
            if (m < 1)
                throw validation_error("curve.pic0_trivial_mod[" + std::to_string(i) + "]",
                                       "moduli must be positive");
            moduli.insert(m);
        }
        pic0 = Pic0Trivial::only(std::move(moduli));
    } else {
        throw validation_error("curve.pic0_trivial_mod", "expected \"all\" or a list");
    }

    const json& places_json = require_field(j, "places", "curve");
    if (!places_json.is_array()) throw validation_error("curve.places", "expected a list");
    std::vector<Place> places;
    for (std::size_t i = 0; i < places_json.size(); ++i) {
        const std::string path = "curve.places[" + std::to_string(i) + "]";
        places.push_back(Place{as_string(require_field(places_json[i], "id", path), path + ".id"),
                               as_int(require_field(places_json[i], "degree", path),
                                      path + ".degree")});
    }
    return Curve(index, std::move(places), std::move(pic0));
}

RamificationType parse_ramification(const std::string& text, const std::string& path) {
    if (text == "split") return RamificationType::totally_split;
    if (text == "inert") return RamificationType::inert;
    if (text == "ramified") return RamificationType::ramified;
    throw validation_error(path, "expected \"split\", \"inert\" or \"ramified\"");
}

QuadExtension parse_extension(const json& j) {
    const std::string mode = as_string(require_field(j, "mode", "outer"), "outer.mode");
    if (mode == "constant_unramified") return QuadExtension::constant_unramified();
    if (mode != "declared")
        throw validation_error("outer.mode", "expected \"constant_unramified\" or \"declared\"");
    const json& types_json = require_field(j, "declared_types", "outer");
    if (!types_json.is_object())
        throw validation_error("outer.declared_types", "expected an object keyed by place id");
    std::map<std::string, RamificationType> types;
    for (const auto& [id, value] : types_json.items())
        types.emplace(id, parse_ramification(as_string(value, "outer.declared_types." + id),
                                             "outer.declared_types." + id));
    return QuadExtension::declared(std::move(types));
}

std::map<std::string, LocalUnitaryData> parse_local_data(const json& j) {
    const json& data_json = require_field(j, "local_data", "outer");
    if (!data_json.is_object())
        throw validation_error("outer.local_data", "expected an object keyed by place id");
    std::map<std::string, LocalUnitaryData> data;
    for (const auto& [id, value] : data_json.items()) {
        const std::string path = "outer.local_data." + id;
        LocalUnitaryData d;
        d.unramified = as_bool(require_field(value, "unramified", path), path + ".unramified");
        d.exponent = as_int(require_field(value, "exponent", path), path + ".exponent");
        data.emplace(id, d);
    }
    return data;
}

std::vector<std::string> default_oracle_support(const SAProblem& p) {
    std::vector<std::string> support;
    for (const auto& [id, v] : p.curve().places()) {
        (void)v;
        if (p.is_excluded(id)) continue;
        if (support.size() == 3) break;
        support.push_back(id);
    }
    return support;
}

std::string image_label(const OuterProblem& p, const Place& v) {
    try {
        const TwoRostImage image = two_rost_image(p, v);
        switch (image.kind) {
            case TwoRostImage::Kind::zero:
                return "0";
            case TwoRostImage::Kind::cyclic:
                return "Z/" + std::to_string(image.order);
            case TwoRostImage::Kind::bounded_by_2:
                return "<=2";
        }
        return "-";
    } catch (const unsupported_case_error&) {
        return "unsupported";
    }
}

std::string ramification_label(RamificationType type) {
    switch (type) {
        case RamificationType::totally_split:
            return "split";
        case RamificationType::inert:
            return "inert";
        case RamificationType::ramified:
            return "ramified";
    }
    return "-";
}

Report run_inner(const Scenario& s, const RunOptions& options) {
    SAProblem p(s.curve, s.brauer.value(), s.excluded);
    const SAVerdict verdict = decide_sa(p);

    Report r;
    r.name = s.name;
    r.mode = s.mode;
    r.holds = verdict.holds;
    r.defect_order = verdict.defect_order;
    const std::int64_t generator_multiple = p.exponent() / verdict.defect_order;
    r.defect_group = DefectGroup{
        verdict.defect_order,
        verdict.defect_order == 1 ? "trivial" : std::to_string(generator_multiple) + "*R_H"};

    for (const auto& [id, v] : p.curve().places()) {
        LocalRow row;
        row.id = id;
        row.degree = v.degree;
        row.in_excluded = p.is_excluded(id);
        row.m_v = p.local_modulus(v);
        row.local_group_order = p.local_modulus(v);  // H^1(K_v, H) is cyclic of order m_v
        r.local_table.push_back(std::move(row));
    }

    if (verdict.witness) {
        const auto& [id, value] = *verdict.witness->entries.begin();
        r.witness = WitnessOut{id, value.value, value.modulus, std::nullopt};
    }
    r.witness_note = verdict.witness_note;

    if (options.with_oracle) {
        const std::vector<std::string> support =
            s.oracle ? s.oracle->support : default_oracle_support(p);
        const std::int64_t budget = s.oracle ? s.oracle->budget : 1000000;
        r.oracle = verify_exact_sequence(p, support, budget, options.oracle_workers);
    }
    return r;
}

Report run_outer(const Scenario& s) {
    OuterProblem p(s.curve, s.extension.value(), s.local_data);
    const OuterVerdict verdict = check_outer_failure(p, s.excluded);

    Report r;
    r.name = s.name;
    r.mode = s.mode;
    r.failure_proven = verdict.failure_proven;
    r.outer_reason = verdict.reason;

    for (const auto& [id, v] : p.curve().places()) {
        const RamificationType type = classify_place(p.extension(), v);
        const LocalUnitaryData& data = p.local_data(id);
        LocalRow row;
        row.id = id;
        row.degree = v.degree;
        row.in_excluded = s.excluded.count(id) > 0;
        row.ramification = ramification_label(type);
        row.rost_image = image_label(p, v);
        if (type == RamificationType::totally_split && data.unramified)
            row.local_group_order = data.exponent;  // cyclic, generated by a uniformizer class
        r.local_table.push_back(std::move(row));
    }

    if (verdict.witness) {
        r.witness = WitnessOut{verdict.witness->place_id, verdict.witness->value.value,
                               verdict.witness->value.modulus, verdict.witness->contribution_order};
    }
    return r;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("scenario is not valid json: ") + e.what());
    }

    const std::string name = as_string(require_field(j, "name", "scenario"), "name");
    const std::string mode = as_string(require_field(j, "mode", "scenario"), "mode");
    if (mode != "inner" && mode != "outer")
        throw validation_error("mode", "expected \"inner\" or \"outer\"");

    Curve curve = parse_curve(require_field(j, "curve", "scenario"));

    std::optional<BrauerClass> brauer;
    if (j.contains("brauer_class")) {
        const json& bj = j.at("brauer_class");
        const std::int64_t num =
            as_int(require_field(bj, "numerator", "brauer_class"), "brauer_class.numerator");
        const std::int64_t den =
            as_int(require_field(bj, "denominator", "brauer_class"), "brauer_class.denominator");
        if (den < 1) throw validation_error("brauer_class.denominator", "must be positive");
        brauer = BrauerClass(make_qz(num, den));
    }
    if (mode == "inner" && !brauer)
        throw validation_error("brauer_class", "required in inner mode");

    const json& excluded_json = require_field(j, "excluded_places", "scenario");
    if (!excluded_json.is_array() || excluded_json.empty())
        throw validation_error("excluded_places", "expected a non-empty list of place ids");
    std::set<std::string> excluded;
    for (std::size_t i = 0; i < excluded_json.size(); ++i) {
        const std::string path = "excluded_places[" + std::to_string(i) + "]";
        std::string id = as_string(excluded_json[i], path);
        if (!curve.has_place(id)) throw validation_error(path, "unknown place id '" + id + "'");
        if (!excluded.insert(std::move(id)).second)
            throw validation_error(path, "duplicate place id");
    }

    bool has_primitive_root = false;
    if (j.contains("has_primitive_root"))
        has_primitive_root = as_bool(j.at("has_primitive_root"), "has_primitive_root");

    std::optional<QuadExtension> extension;
    std::map<std::string, LocalUnitaryData> local_data;
    if (mode == "outer") {
        const json& oj = require_field(j, "outer", "scenario");
        extension = parse_extension(oj);
        local_data = parse_local_data(oj);
    }

    std::optional<OracleSpec> oracle;
    if (j.contains("oracle") && !j.at("oracle").is_null()) {
        const json& oj = j.at("oracle");
        OracleSpec spec;
        const json& support_json = require_field(oj, "support", "oracle");
        if (!support_json.is_array()) throw validation_error("oracle.support", "expected a list");
        for (std::size_t i = 0; i < support_json.size(); ++i) {
            const std::string path = "oracle.support[" + std::to_string(i) + "]";
            std::string id = as_string(support_json[i], path);
            if (!curve.has_place(id)) throw validation_error(path, "unknown place id '" + id + "'");
            if (excluded.count(id))
                throw validation_error(path, "place '" + id + "' lies in the excluded set");
            spec.support.push_back(std::move(id));
        }
        if (oj.contains("budget")) {
            spec.budget = as_int(oj.at("budget"), "oracle.budget");
            if (spec.budget < 1) throw validation_error("oracle.budget", "must be positive");
        }
        oracle = std::move(spec);
    }

    Scenario s{name,
               mode,
               std::move(curve),
               std::move(brauer),
               std::move(excluded),
               has_primitive_root,
               std::move(extension),
               std::move(local_data),
               std::move(oracle)};
    validate_scenario(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

void validate_scenario(const Scenario& s) {
    if (s.mode == "inner") {
        SAProblem problem(s.curve, s.brauer.value(), s.excluded);
        (void)problem;
    } else {
        OuterProblem problem(s.curve, s.extension.value(), s.local_data);
        (void)problem;
    }
}

Report run_scenario(const Scenario& s, const RunOptions& options) {
    return s.mode == "inner" ? run_inner(s, options) : run_outer(s);
}

}  // namespace sa
