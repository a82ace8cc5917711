#include "sa/curve.hpp"

#include <numeric>
#include <utility>

namespace sa {

Curve::Curve(std::int64_t index, std::vector<Place> places, Pic0Trivial pic0)
    : index_(index), pic0_(std::move(pic0)) {
    if (index_ < 1) throw validation_error("curve.index", "must be a positive integer");
    if (places.empty()) throw validation_error("curve.places", "at least one place is required");
    for (auto& v : places) {
        if (v.id.empty()) throw validation_error("curve.places", "place id must be non-empty");
        if (v.degree < 1)
            throw validation_error("curve.places", "place '" + v.id + "' must have degree >= 1");
        if (v.degree % index_ != 0)
            throw validation_error("curve.places",
                                   "place '" + v.id + "' has degree " + std::to_string(v.degree) +
                                       ", not divisible by the declared index " +
                                       std::to_string(index_));
        auto inserted = places_.emplace(v.id, v).second;
        if (!inserted) throw validation_error("curve.places", "duplicate place id '" + v.id + "'");
    }
}

const Place& Curve::place(const std::string& id) const {
    auto it = places_.find(id);
    if (it == places_.end()) throw lookup_error("unknown place id '" + id + "'");
    return it->second;
}

Divisor make_divisor(std::map<std::string, std::int64_t> coefficients) {
    for (auto it = coefficients.begin(); it != coefficients.end();) {
        if (it->second == 0)
            it = coefficients.erase(it);
        else
            ++it;
    }
    return Divisor{std::move(coefficients)};
}

std::int64_t divisor_degree(const Curve& c, const Divisor& z) {
    std::int64_t sum = 0;
    for (const auto& [id, n] : z.coefficients) sum += n * c.place(id).degree;
    return sum;
}

std::int64_t index_of_set(const Curve& c, const std::set<std::string>& ids) {
    if (ids.empty()) throw domain_error("the index of an empty set of places is undefined");
    std::int64_t g = 0;
    for (const auto& id : ids) g = std::gcd(g, c.place(id).degree);
    return g;
}

Curve make_projective_line(const std::string& prime_label, std::int64_t max_degree) {
    if (max_degree < 1) throw precondition_error("max_degree must be >= 1");
    std::vector<Place> places;
    places.reserve(static_cast<std::size_t>(max_degree));
    for (std::int64_t d = 1; d <= max_degree; ++d)
        places.push_back(Place{prime_label + "_d" + std::to_string(d), d});
    return Curve(1, std::move(places), Pic0Trivial::every());
}

}  // namespace sa
