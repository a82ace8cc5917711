#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "sa/arith.hpp"
#include "sa/curve.hpp"
#include "sa/errors.hpp"

namespace sa {

// Behaviour of a place under the quadratic extension defining the outer
// form: the place splits completely, stays inert, or ramifies.
enum class RamificationType { totally_split, inert, ramified };

// The quadratic extension L/K. Either it comes from an unramified constant
// extension of the base field, in which case the type of a place is read
// off from the parity of its degree, or the types are declared per place.
struct QuadExtension {
    enum class Mode { constant_unramified, declared };

    Mode mode = Mode::constant_unramified;
    std::map<std::string, RamificationType> declared_types;

    static QuadExtension constant_unramified() { return QuadExtension{}; }
    static QuadExtension declared(std::map<std::string, RamificationType> types) {
        return QuadExtension{Mode::declared, std::move(types)};
    }

    friend bool operator==(const QuadExtension&, const QuadExtension&) = default;
};

// Declared facts about the local class at one place: whether it is
// unramified over the upstairs place, and its exponent there.
struct LocalUnitaryData {
    bool unramified = true;
    std::int64_t exponent = 1;

    friend bool operator==(const LocalUnitaryData&, const LocalUnitaryData&) = default;
};

// A strong-approximation question for an outer form SU(A, tau): the curve,
// the quadratic extension, and the declared local data at every registered
// place.
class OuterProblem {
public:
    OuterProblem(Curve curve, QuadExtension extension,
                 std::map<std::string, LocalUnitaryData> local_data);

    const Curve& curve() const { return curve_; }
    const QuadExtension& extension() const { return extension_; }
    const LocalUnitaryData& local_data(const std::string& id) const;

private:
    Curve curve_;
    QuadExtension extension_;
    std::map<std::string, LocalUnitaryData> local_data_;
};

RamificationType classify_place(const QuadExtension& e, const Place& v);

// What is known about the image of twice the Rost invariant at one place.
struct TwoRostImage {
    enum class Kind { zero, cyclic, bounded_by_2 };

    Kind kind = Kind::zero;
    std::int64_t order = 0;  // set for Kind::cyclic

    friend bool operator==(const TwoRostImage&, const TwoRostImage&) = default;
};

// zero at inert places with unramified class, cyclic of the local exponent
// at totally split places with unramified class, bounded by 2 at ramified
// places. Ramified local classes at inert or split places are outside the
// computed cases.
TwoRostImage two_rost_image(const OuterProblem& p, const Place& v);

struct OuterWitness {
    std::string place_id;
    ZModM value;                        // class of a uniformizer power
    std::int64_t contribution_order;    // order of its pairing contribution

    friend bool operator==(const OuterWitness&, const OuterWitness&) = default;
};

// failure_proven = true comes with a witness. failure_proven = false only
// means the criterion does not apply; it never asserts that strong
// approximation holds.
struct OuterVerdict {
    bool failure_proven = false;
    std::optional<OuterWitness> witness;
    std::string reason;  // why the criterion did not apply; empty when proven

    friend bool operator==(const OuterVerdict&, const OuterVerdict&) = default;
};

// Failure criterion: some totally split place outside S carries an
// unramified class of exponent at least 3, while every place of S is inert
// with unramified class. The S-places then contribute classes of order at
// most 2 and cannot cancel the witness contribution.
OuterVerdict check_outer_failure(const OuterProblem& p, const std::set<std::string>& excluded);

struct RamifiedBound {
    std::int64_t bound = 1;   // min(declared exponent, 2)
    bool consistent = true;   // false when the declared exponent exceeds 2

    friend bool operator==(const RamifiedBound&, const RamifiedBound&) = default;
};

// At a ramified place the class is killed by 2; a declared exponent above
// 2 flags the model as inconsistent instead of being trusted.
RamifiedBound ramified_bound(const OuterProblem& p, const Place& v);

}  // namespace sa
