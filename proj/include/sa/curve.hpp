#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sa/arith.hpp"
#include "sa/errors.hpp"

namespace sa {

// A closed point of the curve. degree is the degree of its residue field
// over the p-adic base field.
struct Place {
    std::string id;
    std::int64_t degree = 1;

    friend bool operator==(const Place&, const Place&) = default;
};

// The moduli m for which Pic^0(X)/m is declared to vanish. This is a trust
// boundary: the hypothesis is an input, not something the model verifies.
struct Pic0Trivial {
    bool all = false;
    std::set<std::int64_t> moduli;

    static Pic0Trivial every() { return Pic0Trivial{true, {}}; }
    static Pic0Trivial only(std::set<std::int64_t> ms) { return Pic0Trivial{false, std::move(ms)}; }

    // m = 1 is vacuously trivial.
    bool contains(std::int64_t m) const { return all || m == 1 || moduli.count(m) > 0; }

    friend bool operator==(const Pic0Trivial&, const Pic0Trivial&) = default;
};

// A smooth projective curve over a p-adic field, reduced to the data the
// computations consume: its index, a finite sample of closed points, and
// the Pic^0/m triviality hypothesis. The declared index must divide the
// degree of every registered place; violations are rejected outright.
class Curve {
public:
    Curve(std::int64_t index, std::vector<Place> places, Pic0Trivial pic0);

    std::int64_t index() const { return index_; }
    const std::map<std::string, Place>& places() const { return places_; }
    const Place& place(const std::string& id) const;  // throws lookup_error
    bool has_place(const std::string& id) const { return places_.count(id) > 0; }
    bool pic0_trivial_mod(std::int64_t m) const { return pic0_.contains(m); }
    const Pic0Trivial& pic0() const { return pic0_; }

private:
    std::int64_t index_;
    std::map<std::string, Place> places_;
    Pic0Trivial pic0_;
};

// A divisor in sparse canonical form: ids absent from the map have
// coefficient zero.
struct Divisor {
    std::map<std::string, std::int64_t> coefficients;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

// Builds a divisor, dropping zero coefficients.
Divisor make_divisor(std::map<std::string, std::int64_t> coefficients);

// deg(sum n_v v) = sum n_v deg(v). Every id must be registered.
std::int64_t divisor_degree(const Curve& c, const Divisor& z);

// I(S) = gcd of the degrees of the places in S. Undefined for empty S.
std::int64_t index_of_set(const Curve& c, const std::set<std::string>& ids);

// The projective line over the base field named by prime_label: index 1,
// Pic^0 trivial for every modulus, one synthetic place of each degree from
// 1 to max_degree.
Curve make_projective_line(const std::string& prime_label, std::int64_t max_degree);

}  // namespace sa
