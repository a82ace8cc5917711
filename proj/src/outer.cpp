#include "sa/outer.hpp"

#include <algorithm>
#include <utility>

namespace sa {

OuterProblem::OuterProblem(Curve curve, QuadExtension extension,
                           std::map<std::string, LocalUnitaryData> local_data)
    : curve_(std::move(curve)), extension_(std::move(extension)),
      local_data_(std::move(local_data)) {
    for (const auto& [id, data] : local_data_) {
        if (!curve_.has_place(id))
            throw validation_error("outer.local_data", "unknown place id '" + id + "'");
        if (data.exponent < 1)
            throw validation_error("outer.local_data",
                                   "place '" + id + "' must declare an exponent >= 1");
    }
    for (const auto& [id, v] : curve_.places()) {
        (void)v;
        if (local_data_.count(id) == 0)
            throw validation_error("outer.local_data", "no local data for place '" + id + "'");
        if (extension_.mode == QuadExtension::Mode::declared &&
            extension_.declared_types.count(id) == 0)
            throw validation_error("outer.declared_types",
                                   "no ramification type declared for place '" + id + "'");
    }
    for (const auto& [id, type] : extension_.declared_types) {
        (void)type;
        if (!curve_.has_place(id))
            throw validation_error("outer.declared_types", "unknown place id '" + id + "'");
    }
}

const LocalUnitaryData& OuterProblem::local_data(const std::string& id) const {
    auto it = local_data_.find(id);
    if (it == local_data_.end()) throw lookup_error("no local data for place '" + id + "'");
    return it->second;
}

RamificationType classify_place(const QuadExtension& e, const Place& v) {
    if (e.mode == QuadExtension::Mode::constant_unramified) {
        // The residue extension has degree 2 and embeds into kappa(v)
        // exactly when deg(v) is even; a constant unramified extension
        // never ramifies.
        return v.degree % 2 == 0 ? RamificationType::totally_split : RamificationType::inert;
    }
    auto it = e.declared_types.find(v.id);
    if (it == e.declared_types.end())
        throw lookup_error("no ramification type declared for place '" + v.id + "'");
    return it->second;
}

TwoRostImage two_rost_image(const OuterProblem& p, const Place& v) {
    const LocalUnitaryData& data = p.local_data(v.id);
    switch (classify_place(p.extension(), v)) {
        case RamificationType::inert:
            if (!data.unramified)
                throw unsupported_case_error("inert place '" + v.id +
                                             "' carries a ramified class; its image is not computed");
            return TwoRostImage{TwoRostImage::Kind::zero, 0};
        case RamificationType::totally_split:
            if (!data.unramified)
                throw unsupported_case_error("totally split place '" + v.id +
                                             "' carries a ramified class; its image is not computed");
            return TwoRostImage{TwoRostImage::Kind::cyclic, data.exponent};
        case RamificationType::ramified:
            return TwoRostImage{TwoRostImage::Kind::bounded_by_2, 0};
    }
    throw model_inconsistency_error("unreachable ramification type");
}

OuterVerdict check_outer_failure(const OuterProblem& p, const std::set<std::string>& excluded) {
    if (excluded.empty()) throw domain_error("the excluded set S must be non-empty");
    for (const auto& id : excluded) {
        const Place& v = p.curve().place(id);
        const RamificationType type = classify_place(p.extension(), v);
        const LocalUnitaryData& data = p.local_data(id);
        if (type != RamificationType::inert) {
            OuterVerdict verdict;
            verdict.reason = "the criterion needs S to consist of inert places with unramified "
                             "classes, but '" + id + "' is not inert";
            return verdict;
        }
        if (!data.unramified)
            throw unsupported_case_error("S contains the inert place '" + id +
                                         "' with a ramified class; its contribution is not "
                                         "computed");
    }
    for (const auto& [id, v] : p.curve().places()) {
        if (excluded.count(id)) continue;
        if (classify_place(p.extension(), v) != RamificationType::totally_split) continue;
        const LocalUnitaryData& data = p.local_data(id);
        if (!data.unramified || data.exponent < 3) continue;
        // S-places feed the pairing through classes of order at most 2;
        // a contribution of order >= 3 cannot be cancelled.
        OuterVerdict verdict;
        verdict.failure_proven = true;
        verdict.witness = OuterWitness{id, make_zmod(1, data.exponent), data.exponent};
        return verdict;
    }
    OuterVerdict verdict;
    verdict.reason =
        "no totally split place outside S carries an unramified class of exponent >= 3";
    return verdict;
}

RamifiedBound ramified_bound(const OuterProblem& p, const Place& v) {
    if (classify_place(p.extension(), v) != RamificationType::ramified)
        throw precondition_error("ramified_bound needs a ramified place");
    const LocalUnitaryData& data = p.local_data(v.id);
    return RamifiedBound{std::min<std::int64_t>(data.exponent, 2), data.exponent <= 2};
}

}  // namespace sa
